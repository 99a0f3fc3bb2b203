#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the rank oracle and data types, and are only meant for small inputs.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyclesys/cyclesys.hpp"

namespace cyclesys::testing {

/// Minimal dependent subsets by scanning every subset of the ground set.
std::vector<ElementSubset> brute_circuits(const Matroid& m);

/// Edge sets of simple cycles of a multigraph (loops and digons included),
/// found by scanning edge subsets for connected 2-regular subgraphs.
std::vector<ElementSubset> brute_graph_cycles(const MultiGraph& g);

/// Spanning forests of maximum size, counted by scanning edge subsets with a
/// private union-find.
std::uint64_t brute_spanning_forests(const MultiGraph& g);

/// Σ_S x^{r(E)-r(S)} y^{|S|-r(S)} over all subsets S.
std::map<std::pair<int, int>, std::uint64_t> brute_tutte(const Matroid& m);

/// Multiplicity-count unique union.
ElementSubset brute_unique_union(const std::vector<ElementSubset>& family, std::uint64_t sigma);

/// Every nonempty σ has a dependent unique union.
bool brute_unique_union_property(const Matroid& m, const std::vector<ElementSubset>& family);

/// Coparking test straight from the definition: every nonempty σ has some
/// i in σ with a_i < |C_i ∩ 𝒞_σ|.
bool brute_is_coparking(const std::vector<ElementSubset>& cycles, const std::vector<int>& a);

/// All vectors with a_i < |C_i| that pass brute_is_coparking.
std::vector<std::vector<int>> brute_coparking_set(const std::vector<ElementSubset>& cycles);

/// Independent sets by scanning every subset.
std::vector<ElementSubset> brute_bases(const Matroid& m);

}  // namespace cyclesys::testing
