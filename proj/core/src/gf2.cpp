#include "cyclesys/gf2.hpp"

#include "cyclesys/errors.hpp"

namespace cyclesys {

int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t pivot_row = rows[i];
    if (pivot_row == 0) continue;
    const std::uint64_t pivot = pivot_row & -pivot_row;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j] & pivot) rows[j] ^= pivot_row;
    }
    ++rank;
  }
  return rank;
}

int circuit_space_rank(const Matroid& m, std::span<const ElementSubset> vectors) {
  std::vector<std::uint64_t> rows;
  rows.reserve(vectors.size());
  for (auto v : vectors) {
    if (!v.is_subset_of(m.ground())) throw DomainError("vector " + m.format(v) + " leaves the ground set");
    rows.push_back(v.bits());
  }
  return gf2_rank(std::move(rows));
}

}  // namespace cyclesys
