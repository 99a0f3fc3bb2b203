#include "cyclesys/firing.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclesys/errors.hpp"

namespace cyclesys {

IntMatrix firing_matrix(std::span<const ElementSubset> cycles) {
  const std::size_t g = cycles.size();
  IntMatrix l(g, std::vector<std::int64_t>(g, 0));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      l[i][j] = i == j ? cycles[i].size() : -(cycles[i] & cycles[j]).size();
    }
  }
  return l;
}

bool is_m_matrix(const IntMatrix& l) {
  using Rational = boost::multiprecision::cpp_rational;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i].size() != n) throw DomainError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j ? l[i][j] <= 0 : l[i][j] > 0) return false;
    }
  }
  // Gauss-Jordan on [L | I].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = l[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j < 2 * n; ++j) {
      if (a[i][j] < 0) return false;
    }
  }
  return true;
}

}  // namespace cyclesys
