#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclesys/cycle_system.hpp"

namespace cyclesys {

/// Square integer matrix, row-major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// L_ii = |C_i|, L_ij = -|C_i ∩ C_j|.
IntMatrix firing_matrix(std::span<const ElementSubset> cycles);
inline IntMatrix firing_matrix(const CycleSystem& cs) { return firing_matrix(cs.cycles()); }

/// Positive diagonal, non-positive off-diagonal, nonsingular, and an
/// entrywise non-negative inverse, decided with exact rational arithmetic.
/// The empty matrix qualifies.
bool is_m_matrix(const IntMatrix& l);

}  // namespace cyclesys
