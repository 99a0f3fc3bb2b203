#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclesys/cycle_system.hpp"

namespace cyclesys {

/// Bivariate polynomial with non-negative integer coefficients.
class TuttePolynomial {
 public:
  TuttePolynomial() = default;
  /// Dense coefficient table: coeffs[i][j] multiplies x^i y^j.
  explicit TuttePolynomial(std::vector<std::vector<std::uint64_t>> coeffs);

  std::uint64_t coefficient(int i, int j) const;
  int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int y_degree() const;
  /// Non-zero coefficients keyed by (i, j).
  std::map<std::pair<int, int>, std::uint64_t> terms() const;

  /// Exact value at non-negative integers. Throws ResourceError on overflow.
  std::uint64_t evaluate(std::uint64_t x, std::uint64_t y) const;
  /// Coefficients of T(x, 1), lowest power first.
  std::vector<std::uint64_t> at_y_one() const;
  /// T(y, x).
  TuttePolynomial swapped() const;

  /// "x^2 + x + y"
  std::string format() const;

  bool operator==(const TuttePolynomial& other) const { return terms() == other.terms(); }

 private:
  std::vector<std::vector<std::uint64_t>> coeffs_;
};

struct TutteOptions {
  /// Memo-table cap; 0 for unlimited. Exceeding it throws ResourceError.
  std::size_t max_memo_entries = 0;
};

/// Deletion–contraction on the smallest element that is neither a loop nor a
/// bridge, memoized on (remaining elements, closure of the contracted set).
TuttePolynomial tutte(const Matroid& m, const TutteOptions& options = {});

/// (h_0, ..., h_r) read off T(x, 1) in reverse; length r(M) + 1.
std::vector<std::uint64_t> h_vector(const TuttePolynomial& t, int rank);
std::vector<std::uint64_t> h_vector(const Matroid& m);

/// f[k] = number of independent sets of size k, k = 0..r(M).
std::vector<std::uint64_t> f_vector(const Matroid& m);

/// h-vector computed from an f-vector by Σ f_{i-1}(t-1)^{d-i} = Σ h_k t^{d-k}.
std::vector<std::int64_t> h_from_f(const std::vector<std::uint64_t>& f);

/// Degree vector of the system, zero-padded to r(M) + 1, equals h(M).
bool check_main_theorem(const CycleSystem& cs);

}  // namespace cyclesys
