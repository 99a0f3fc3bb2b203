#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclesys/element_subset.hpp"
#include "cyclesys/multigraph.hpp"

namespace cyclesys {

enum class BackendKind { graphic, uniform, circuit_defined, dual, direct_sum };

std::string_view to_string(BackendKind kind);

namespace detail {
class Backend;
}

/// A matroid given by a rank oracle over a labelled ground set.
///
/// Every matroid lives inside a *universe* (a GroundSet of at most 64
/// labels); its ground set is a subset of that universe. Deletion and
/// contraction keep the universe, so element indices stay stable across
/// minors and the subsets of a minor are directly comparable with those of
/// the original matroid. Values are immutable and cheap to copy.
class Matroid {
 public:
  /// Cycle matroid M(G). Ground set = edges of G in insertion order.
  static Matroid graphic(const MultiGraph& g);
  /// U(rank, size) on labels "1".."size".
  static Matroid uniform(int rank, int size);
  static Matroid uniform(int rank, GroundSet ground);
  /// Every subset independent (U(n,n)).
  static Matroid free(int size) { return uniform(size, size); }
  /// Matroid given by its circuits. Throws DomainError when the list breaks
  /// the circuit axioms (empty member or containment between members).
  /// Circuit elimination is not checked here; see `satisfies_circuit_elimination`.
  static Matroid from_circuits(GroundSet ground, std::vector<ElementSubset> circuits);

  const GroundSet& universe() const { return *universe_; }
  const std::shared_ptr<const GroundSet>& universe_ptr() const { return universe_; }
  ElementSubset ground() const { return ground_; }
  int size() const { return ground_.size(); }
  BackendKind kind() const;

  /// r(S). Throws DomainError unless S is a subset of the ground set.
  int rank(ElementSubset s) const;
  int rank() const { return rank_unchecked(ground_); }
  int corank() const { return size() - rank(); }

  /// r(S) without the ground-set check. S must be a subset of ground().
  int rank_unchecked(ElementSubset s) const;
  bool independent_unchecked(ElementSubset s) const;

  ElementSubset subset(std::initializer_list<std::string_view> labels) const;
  ElementSubset subset(std::span<const std::string> labels) const;
  std::string format(ElementSubset s) const { return universe_->format(s); }

  /// Edge endpoints of the current (possibly contracted) graph, indexed by
  /// element; null for non-graphic backends.
  const std::vector<std::pair<int, int>>* graph_ends() const;

  Matroid(std::shared_ptr<const GroundSet> universe, ElementSubset ground,
          std::shared_ptr<const detail::Backend> backend);

  const detail::Backend& backend() const { return *backend_; }

 private:
  std::shared_ptr<const GroundSet> universe_;
  ElementSubset ground_;
  std::shared_ptr<const detail::Backend> backend_;
};

int rank(const Matroid& m, ElementSubset s);
bool is_independent(const Matroid& m, ElementSubset s);
bool is_basis(const Matroid& m, ElementSubset s);

/// All circuits in canonical order (cardinality, then lexicographic).
std::vector<ElementSubset> circuits(const Matroid& m);

/// The unique circuit inside basis ∪ {e}. Throws DomainError if `basis` is
/// not a basis or e is in it.
ElementSubset fundamental_circuit(const Matroid& m, ElementSubset basis, int e);

struct LoopsAndBridges {
  ElementSubset loops;
  ElementSubset bridges;
};
LoopsAndBridges loops_and_bridges(const Matroid& m);

/// Calls `visit` on every basis in canonical order; stops early when `visit`
/// returns false.
void for_each_basis(const Matroid& m, const std::function<bool(ElementSubset)>& visit);
/// Materialized basis list. Throws ResourceError when more than `cap` bases exist.
std::vector<ElementSubset> bases(const Matroid& m, std::size_t cap = 1'000'000);
std::size_t count_bases(const Matroid& m);

Matroid deletion(const Matroid& m, ElementSubset s);
/// M/S, defined for any S via r_{M/S}(X) = r(X ∪ S) − r(S).
Matroid contraction(const Matroid& m, ElementSubset s);
Matroid restriction(const Matroid& m, ElementSubset s);
Matroid dual(const Matroid& m);

bool is_connected(const Matroid& m);
/// Connected components in ground order of their smallest element. Loops and
/// bridges are singleton components.
std::vector<ElementSubset> components(const Matroid& m);

/// Circuit elimination over all circuit pairs. Quadratic in the circuit
/// count, intended for validation of small inputs.
bool satisfies_circuit_elimination(const Matroid& m);

/// Same ground labels and identical circuit lists (compared by label).
bool same_matroid(const Matroid& a, const Matroid& b);

/// Direct sum; ground labels must be pairwise disjoint. The universe lists
/// the labels of each summand in order.
Matroid direct_sum(std::span<const Matroid> parts);
/// Parallel connection along the shared element `p`, which must be the only
/// common label and neither a loop nor a bridge on either side.
Matroid parallel_connection(const Matroid& m, const Matroid& n, std::string_view p);
/// (M ∥_p N) \ p.
Matroid two_sum(const Matroid& m, const Matroid& n, std::string_view p);

}  // namespace cyclesys
