#include "cyclesys/tutte.hpp"

#include <algorithm>
#include <unordered_map>

#include "cyclesys/coparking.hpp"
#include "cyclesys/errors.hpp"

namespace cyclesys {

namespace {

using Table = std::vector<std::vector<std::uint64_t>>;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("Tutte evaluation overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("Tutte evaluation overflows 64 bits");
  return out;
}

struct Key {
  std::uint64_t remaining;
  std::uint64_t closure;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    return ElementSubsetHash{}(ElementSubset{k.remaining}) * 31 + ElementSubsetHash{}(ElementSubset{k.closure});
  }
};

// Minors M / T \ D of a fixed matroid are described by the surviving set R
// and the contracted set T; the minor only depends on R and cl(T).
class TutteSolver {
 public:
  TutteSolver(const Matroid& m, const TutteOptions& options)
      : m_(m), options_(options), rank_(m.rank()), corank_(m.corank()) {}

  Table solve() { return node(m_.ground(), ElementSubset{}); }

 private:
  int rank_with(ElementSubset s) const { return m_.rank_unchecked(s); }

  ElementSubset closure(ElementSubset t) const {
    const int r = rank_with(t);
    ElementSubset out = t;
    for (int e : m_.ground() - t) {
      if (rank_with(t.with(e)) == r) out.insert(e);
    }
    return out;
  }

  Table zero() const {
    return Table(static_cast<std::size_t>(rank_ + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(corank_ + 1), 0));
  }

  Table node(ElementSubset remaining, ElementSubset contracted) {
    // Split off loops (factor y) and bridges (factor x) of the minor.
    const int r_t = rank_with(contracted);
    const int r_all = rank_with(remaining | contracted);
    int loops = 0, bridges = 0;
    ElementSubset core = remaining;
    ElementSubset bridge_set;
    for (int e : remaining) {
      if (rank_with(contracted.with(e)) == r_t) {
        ++loops;
        core.erase(e);
      } else if (rank_with((remaining | contracted).without(e)) == r_all - 1) {
        ++bridges;
        core.erase(e);
        bridge_set.insert(e);
      }
    }
    const ElementSubset t = contracted | bridge_set;

    Table inner;
    if (core.empty()) {
      inner = zero();
      inner[0][0] = 1;
    } else {
      const Key key{core.bits(), closure(t).bits()};
      if (auto it = memo_.find(key); it != memo_.end()) {
        inner = it->second;
      } else {
        const int e = core.min();
        inner = node(core.without(e), t);
        const Table con = node(core.without(e), t.with(e));
        for (std::size_t i = 0; i < inner.size(); ++i) {
          for (std::size_t j = 0; j < inner[i].size(); ++j) inner[i][j] += con[i][j];
        }
        if (options_.max_memo_entries > 0 && memo_.size() >= options_.max_memo_entries) {
          throw ResourceError("Tutte memo table exceeded " + std::to_string(options_.max_memo_entries) + " entries");
        }
        memo_.emplace(key, inner);
      }
    }
    if (loops == 0 && bridges == 0) return inner;
    Table out = zero();
    for (std::size_t i = 0; i + static_cast<std::size_t>(bridges) < out.size(); ++i) {
      for (std::size_t j = 0; j + static_cast<std::size_t>(loops) < out[i].size(); ++j) {
        out[i + static_cast<std::size_t>(bridges)][j + static_cast<std::size_t>(loops)] = inner[i][j];
      }
    }
    return out;
  }

  const Matroid& m_;
  const TutteOptions& options_;
  int rank_;
  int corank_;
  std::unordered_map<Key, Table, KeyHash> memo_;
};

void count_independent(const Matroid& m, const std::vector<int>& order, std::size_t start, ElementSubset current,
                       std::vector<std::uint64_t>& f) {
  ++f[static_cast<std::size_t>(current.size())];
  for (std::size_t k = start; k < order.size(); ++k) {
    const ElementSubset next = current.with(order[k]);
    if (m.independent_unchecked(next)) count_independent(m, order, k + 1, next, f);
  }
}

}  // namespace

TuttePolynomial::TuttePolynomial(std::vector<std::vector<std::uint64_t>> coeffs) : coeffs_(std::move(coeffs)) {
  // Trim trailing zero rows so equal polynomials compare equal structurally.
  while (coeffs_.size() > 1 &&
         std::all_of(coeffs_.back().begin(), coeffs_.back().end(), [](std::uint64_t c) { return c == 0; })) {
    coeffs_.pop_back();
  }
}

std::uint64_t TuttePolynomial::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  const auto& row = coeffs_[static_cast<std::size_t>(i)];
  return j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : 0;
}

int TuttePolynomial::y_degree() const {
  int d = -1;
  for (const auto& [ij, c] : terms()) d = std::max(d, ij.second);
  return d;
}

std::map<std::pair<int, int>, std::uint64_t> TuttePolynomial::terms() const {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      if (coeffs_[i][j] != 0) out[{static_cast<int>(i), static_cast<int>(j)}] = coeffs_[i][j];
    }
  }
  return out;
}

std::uint64_t TuttePolynomial::evaluate(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t total = 0;
  for (const auto& [ij, c] : terms()) {
    std::uint64_t term = c;
    for (int k = 0; k < ij.first; ++k) term = checked_mul(term, x);
    for (int k = 0; k < ij.second; ++k) term = checked_mul(term, y);
    total = checked_add(total, term);
  }
  return total;
}

std::vector<std::uint64_t> TuttePolynomial::at_y_one() const {
  std::vector<std::uint64_t> out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (auto c : coeffs_[i]) out[i] += c;
  }
  return out;
}

TuttePolynomial TuttePolynomial::swapped() const {
  Table out;
  for (const auto& [ij, c] : terms()) {
    const auto [i, j] = ij;
    if (out.size() <= static_cast<std::size_t>(j)) out.resize(static_cast<std::size_t>(j) + 1);
    auto& row = out[static_cast<std::size_t>(j)];
    if (row.size() <= static_cast<std::size_t>(i)) row.resize(static_cast<std::size_t>(i) + 1, 0);
    row[static_cast<std::size_t>(i)] = c;
  }
  if (out.empty()) out.push_back({0});
  return TuttePolynomial(std::move(out));
}

std::string TuttePolynomial::format() const {
  const auto t = terms();
  if (t.empty()) return "0";
  std::string out;
  auto power = [](const char* var, int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return var;
    return std::string(var) + "^" + std::to_string(k);
  };
  // Highest total degree first, x before y within a degree.
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [ij, c] : sorted) {
    if (!out.empty()) out += " + ";
    const std::string mono = power("x", ij.first) + power("y", ij.second);
    if (mono.empty()) {
      out += std::to_string(c);
    } else {
      out += (c == 1 ? "" : std::to_string(c)) + mono;
    }
  }
  return out;
}

TuttePolynomial tutte(const Matroid& m, const TutteOptions& options) {
  return TuttePolynomial(TutteSolver(m, options).solve());
}

std::vector<std::uint64_t> h_vector(const TuttePolynomial& t, int rank) {
  const auto tx = t.at_y_one();
  std::vector<std::uint64_t> h(static_cast<std::size_t>(rank + 1), 0);
  for (int k = 0; k <= rank; ++k) {
    const auto i = static_cast<std::size_t>(rank - k);
    h[static_cast<std::size_t>(k)] = i < tx.size() ? tx[i] : 0;
  }
  return h;
}

std::vector<std::uint64_t> h_vector(const Matroid& m) { return h_vector(tutte(m), m.rank()); }

std::vector<std::uint64_t> f_vector(const Matroid& m) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(m.rank() + 1), 0);
  count_independent(m, m.ground().indices(), 0, ElementSubset{}, f);
  return f;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::uint64_t>& f) {
  // With d = f.size() - 1: Σ_i f[i] (t-1)^{d-i} = Σ_k h_k t^{d-k}.
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<std::int64_t> by_power(f.size(), 0);  // coefficient of t^p
  for (int i = 0; i <= d; ++i) {
    // (t-1)^n = Σ_p C(n,p) t^p (-1)^{n-p}
    const int n = d - i;
    std::int64_t binom = 1;
    for (int p = 0; p <= n; ++p) {
      const std::int64_t sign = (n - p) % 2 == 0 ? 1 : -1;
      by_power[static_cast<std::size_t>(p)] += sign * binom * static_cast<std::int64_t>(f[static_cast<std::size_t>(i)]);
      binom = binom * (n - p) / (p + 1);
    }
  }
  std::vector<std::int64_t> h(f.size(), 0);
  for (int k = 0; k <= d; ++k) h[static_cast<std::size_t>(k)] = by_power[static_cast<std::size_t>(d - k)];
  return h;
}

bool check_main_theorem(const CycleSystem& cs) {
  auto d = degree_vector(cs);
  auto h = h_vector(cs.matroid());
  if (d.size() > h.size()) return false;
  d.resize(h.size(), 0);
  return d == h;
}

}  // namespace cyclesys
