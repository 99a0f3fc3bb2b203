#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cyclesys/cycle_system.hpp"
#include "cyclesys/multigraph.hpp"

namespace cyclesys {

/// Triangles {f_u, e, f_v} of Cone(G), one per edge e = uv of G, on the cycle
/// matroid of `cone(g, prefix)`. Parallel edges are allowed; loops are
/// rejected with DomainError.
CycleSystem cone_circuit_system(const MultiGraph& g, const std::string& prefix = "f");

/// Vertex cuts of every non-root vertex (edges with exactly one end there),
/// as a family on the dual of M(G). G must be connected. The family is
/// verified as given; InvalidSystemError reports a failure.
CycleSystem cographic_circuit_system(const MultiGraph& g, int root);

/// Cycle system on two_sum(M, N, p): the M-side cycle containing p is dropped
/// and every N-side cycle D through p becomes (C ∪ D) \ p. M-side cycles come
/// first. Throws PreconditionError unless p lies in the unique union of `m`
/// and in some cycle of `n`.
CycleSystem two_sum_cycle_system(const CycleSystem& m, const CycleSystem& n, std::string_view p);

/// A basis whose fundamental circuits are exactly the members of the system.
std::optional<ElementSubset> fundamental_basis(const CycleSystem& cs);
bool is_fundamental(const CycleSystem& cs);

/// First basis (canonical order) whose fundamental circuits form a cycle system.
std::optional<CycleSystem> find_fundamental_circuit_system(const Matroid& m);

}  // namespace cyclesys
