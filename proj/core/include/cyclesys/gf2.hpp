#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclesys/matroid.hpp"

namespace cyclesys {

/// Rank over GF(2) of bit rows.
int gf2_rank(std::vector<std::uint64_t> rows);

/// GF(2) rank of the indicator vectors of `vectors`. Throws DomainError when a
/// vector leaves the ground set of `m`.
int circuit_space_rank(const Matroid& m, std::span<const ElementSubset> vectors);

}  // namespace cyclesys
