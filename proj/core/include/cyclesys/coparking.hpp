#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cyclesys/cycle_system.hpp"

namespace cyclesys {

using CoparkingFunction = std::vector<int>;

int degree(std::span<const int> a);

struct VerifyResult {
  bool coparking = false;
  /// Indices still in σ when the run got stuck (bit i = cycle i).
  IndexMask stuck = 0;
  /// Removal listing i_1, ..., i_g of a successful run (zero-based).
  std::vector<int> removal_order;

  explicit operator bool() const { return coparking; }
};

/// Burning run: starting from σ = [g], repeatedly remove the smallest i in σ
/// with a_i < |C_i ∩ 𝒞_σ|. Throws DomainError on a length mismatch or a
/// negative entry.
VerifyResult verify(std::span<const ElementSubset> cycles, std::span<const int> a);
inline VerifyResult verify(const CycleSystem& cs, std::span<const int> a) { return verify(cs.cycles(), a); }

/// Same run, but `choose` picks which eligible index to remove (given the
/// eligible indices as a mask). Used to show the verdict is order-free.
VerifyResult verify_with_choice(std::span<const ElementSubset> cycles, std::span<const int> a,
                                const std::function<int(IndexMask)>& choose);

/// All coparking functions, grown breadth-first from the zero vector with
/// entry i capped at |C_i| - 1. Sorted by degree, then lexicographically.
std::vector<CoparkingFunction> enumerate_coparking(std::span<const ElementSubset> cycles);
inline std::vector<CoparkingFunction> enumerate_coparking(const CycleSystem& cs) {
  return enumerate_coparking(cs.cycles());
}

/// Degree histogram (d_0, d_1, ...) of a set of vectors.
std::vector<std::uint64_t> degree_vector(std::span<const CoparkingFunction> set);
std::vector<std::uint64_t> degree_vector(const CycleSystem& cs);

/// Maximal vectors under the componentwise order, in input order.
std::vector<CoparkingFunction> maximal_elements(std::span<const CoparkingFunction> set);
std::vector<CoparkingFunction> maximal_elements(const CycleSystem& cs);

/// r(M) - β, the degree every maximal coparking function must have.
int max_degree(const CycleSystem& cs);
/// All maximal coparking functions have degree max_degree(cs).
bool is_pure(const CycleSystem& cs);
/// All maximal elements of `set` share one degree.
bool is_pure(std::span<const CoparkingFunction> set);
/// Every vector below a member is a member.
bool is_order_ideal(std::span<const CoparkingFunction> set);

/// c with c_{i_k} = |U_k| - 1, where i_1..i_g is the removal listing of a and
/// U_k = C_{i_k} ∩ 𝒞_{i_k..i_g}. Throws DomainError if a is not coparking.
CoparkingFunction maximal_from_run(const CycleSystem& cs, std::span<const int> a);

/// Insert 0 at position i (deletion side). Throws InternalError when the
/// result is not coparking for `cs`.
CoparkingFunction lift_from_deletion(const CycleSystem& cs, int i, std::span<const int> a);
/// Increment coordinate i (contraction side).
CoparkingFunction lift_from_contraction(const CycleSystem& cs, int i, std::span<const int> a);

/// "(2,0,2)"
std::string format_vector(std::span<const int> a);

/// Hasse diagram of a set of vectors under unit coordinate increments.
std::string hasse_dot(std::span<const CoparkingFunction> set);

}  // namespace cyclesys
