#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclesys/coparking.hpp"
#include "cyclesys/cycle_system.hpp"

namespace cyclesys {

/// A total order on the ground set of a matroid.
class GroundOrdering {
 public:
  /// Ground index order.
  static GroundOrdering natural(const Matroid& m);
  /// `labels` lists every ground label once, smallest first. Throws
  /// DomainError otherwise.
  static GroundOrdering from_labels(const Matroid& m, std::span<const std::string> labels);

  /// Elements, smallest first.
  const std::vector<int>& elements() const { return elements_; }
  int position(int e) const { return position_[static_cast<std::size_t>(e)]; }
  /// Largest element of s, or -1 when s is empty.
  int max_of(ElementSubset s) const;

 private:
  std::vector<int> elements_;
  std::array<int, kMaxElements> position_{};
};

/// Basis-to-coparking map for (cycle system, ordering). Throws DomainError
/// when `basis` is not a basis.
CoparkingFunction basis_to_coparking(const CycleSystem& cs, const GroundOrdering& xi, ElementSubset basis);
/// Coparking-to-basis map, inverse of basis_to_coparking. Throws DomainError
/// when `a` is not coparking.
ElementSubset coparking_to_basis(const CycleSystem& cs, const GroundOrdering& xi, std::span<const int> a);

struct DCNode {
  Matroid minor;
  /// Current cycles; origin[k] is the index of cycles[k] in the root family.
  std::vector<ElementSubset> cycles;
  std::vector<int> origin;
  /// Elements contracted on the path from the root.
  ElementSubset contracted;
  /// Right-edge label counts on the path from the root, by root index.
  CoparkingFunction counts;
  /// Branch element and the root index of its container; -1 at leaves.
  int pivot = -1;
  int container = -1;
  int left = -1;
  int right = -1;
  int parent = -1;

  bool is_leaf() const { return pivot < 0; }
};

struct DCLeaf {
  ElementSubset basis;
  CoparkingFunction a;
  int node = -1;
};

class DCTree {
 public:
  explicit DCTree(std::vector<DCNode> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<DCNode>& nodes() const { return nodes_; }
  const DCNode& root() const { return nodes_.front(); }
  /// Leaves from left to right.
  std::vector<DCLeaf> leaves() const;

  /// Right edges are labelled "e:C_i" with i one-based.
  std::string to_dot() const;
  /// basis<TAB>coparking<TAB>degree, one leaf per line.
  std::string to_tsv() const;

 private:
  std::vector<DCNode> nodes_;
};

/// DC-tree T(C, xi). Throws InternalError if the construction stalls, which a
/// valid cycle system rules out.
DCTree build_dc_tree(const CycleSystem& cs, const GroundOrdering& xi);

struct DCStall {
  int node = -1;
  ElementSubset ground;  // ground set of the stalled minor
  IndexMask sigma = 0;   // root indices still in play
  std::string reason;
};

struct GeneralizedDCResult {
  std::optional<DCTree> tree;  // set when the construction completed
  std::optional<DCStall> stall;
  /// Leaf labels a(N) in leaf order.
  std::vector<CoparkingFunction> vectors;
};

/// Same construction for any g(M) cycles, only requiring a nonempty unique
/// union at each node. Throws DomainError if the member count differs from
/// the corank.
GeneralizedDCResult generalized_dc_tree(const Matroid& m, std::vector<ElementSubset> cycles,
                                        const GroundOrdering& xi);

}  // namespace cyclesys
