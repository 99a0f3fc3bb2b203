#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclesys/matroid.hpp"

namespace cyclesys {

/// Index sets over a family of at most 64 members use bit i for member i.
using IndexMask = std::uint64_t;

/// Elements that occur in exactly one member of the family.
ElementSubset unique_union(std::span<const ElementSubset> family);
/// Unique union of the members selected by `sigma`.
ElementSubset unique_union(std::span<const ElementSubset> family, IndexMask sigma);

/// Index of the only member containing e, or -1 when e lies in zero or in
/// several members of the family (restricted to `sigma` if given).
int unique_container(std::span<const ElementSubset> family, int e, IndexMask sigma = ~IndexMask{0});

/// True iff M|K has no bridges, i.e. K is a union of circuits.
bool is_cycle(const Matroid& m, ElementSubset k);

/// Smallest σ (as a number) whose unique union is independent, if any.
std::optional<IndexMask> independent_unique_union(const Matroid& m, std::span<const ElementSubset> family);
bool has_unique_union_property(const Matroid& m, std::span<const ElementSubset> family);

struct SystemDefect {
  std::string reason;
  IndexMask sigma = 0;  // set when the failure is an independent unique union
};

/// Why `family` is not a cycle system of `m`, or nullopt if it is one.
std::optional<SystemDefect> cycle_system_defect(const Matroid& m, std::span<const ElementSubset> family);
bool is_cycle_system(const Matroid& m, std::span<const ElementSubset> family);

/// A matroid together with a verified cycle system.
class CycleSystem {
 public:
  /// Throws InvalidSystemError when `cycles` is not a cycle system of `m`.
  CycleSystem(Matroid m, std::vector<ElementSubset> cycles);

  /// Skips verification; for callers that hold a proof of validity.
  static CycleSystem trusted(Matroid m, std::vector<ElementSubset> cycles);

  const Matroid& matroid() const { return matroid_; }
  const std::vector<ElementSubset>& cycles() const { return cycles_; }
  const ElementSubset& cycle(int i) const { return cycles_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(cycles_.size()); }

  /// Unique union of the whole system.
  ElementSubset unique_union() const { return cyclesys::unique_union(cycles_); }
  /// "{3,4,7} {2,3,6} {1,2,5}"
  std::string format() const;

 private:
  struct Trusted {};
  CycleSystem(Matroid m, std::vector<ElementSubset> cycles, Trusted);

  Matroid matroid_;
  std::vector<ElementSubset> cycles_;
};

struct DeletedSystem {
  CycleSystem system;
  int removed;  // index of the dropped cycle in the parent system
};

/// System on M \ e obtained by dropping the unique cycle containing e.
/// Throws PreconditionError unless e lies in the unique union of the system.
DeletedSystem delete_transform(const CycleSystem& cs, int e);
/// System {C_i \ e} on M / e. Throws PreconditionError if e is a loop.
CycleSystem contract_transform(const CycleSystem& cs, int e);

}  // namespace cyclesys
