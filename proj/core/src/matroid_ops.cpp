#include <algorithm>
#include <map>
#include <numeric>

#include "cyclesys/errors.hpp"
#include "cyclesys/matroid.hpp"
#include "detail/backend.hpp"

namespace cyclesys {

namespace {

void require_subset(const Matroid& m, ElementSubset s) {
  if (!s.is_subset_of(m.ground())) throw DomainError("subset " + m.format(s - m.ground()) + " is not in the ground set");
}

// Independent sets I visited in index-extension order; a circuit is found as
// I + e when e > max(I) and I + e is dependent but every I + e - f is not.
void generic_circuits(const Matroid& m, ElementSubset current, int start, std::vector<int>& order,
                      std::vector<ElementSubset>& out) {
  for (std::size_t k = static_cast<std::size_t>(start); k < order.size(); ++k) {
    const int e = order[k];
    const ElementSubset next = current.with(e);
    if (m.independent_unchecked(next)) {
      generic_circuits(m, next, static_cast<int>(k) + 1, order, out);
      continue;
    }
    bool minimal = true;
    for (int f : current) {
      if (!m.independent_unchecked(next.without(f))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(next);
  }
}

std::vector<std::vector<std::string>> circuit_labels(const Matroid& m) {
  std::vector<std::vector<std::string>> out;
  for (auto c : circuits(m)) {
    auto labels = m.universe().labels_of(c);
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int rank(const Matroid& m, ElementSubset s) { return m.rank(s); }

bool is_independent(const Matroid& m, ElementSubset s) {
  require_subset(m, s);
  return m.independent_unchecked(s);
}

bool is_basis(const Matroid& m, ElementSubset s) {
  require_subset(m, s);
  return s.size() == m.rank() && m.independent_unchecked(s);
}

std::vector<ElementSubset> circuits(const Matroid& m) {
  std::vector<ElementSubset> out;
  if (auto fast = m.backend().circuits(m.ground())) {
    for (auto c : *fast) {
      if (c.is_subset_of(m.ground())) out.push_back(c);
    }
  } else {
    std::vector<int> order = m.ground().indices();
    generic_circuits(m, ElementSubset{}, 0, order, out);
  }
  sort_canonical(out);
  return out;
}

ElementSubset fundamental_circuit(const Matroid& m, ElementSubset basis, int e) {
  if (!is_basis(m, basis)) throw DomainError(m.format(basis) + " is not a basis");
  if (!m.ground().contains(e)) throw DomainError("element #" + std::to_string(e) + " is not in the ground set");
  if (basis.contains(e)) throw DomainError("element " + m.universe().label(e) + " lies in the basis");
  ElementSubset c = ElementSubset::singleton(e);
  const ElementSubset extended = basis.with(e);
  for (int f : basis) {
    if (m.independent_unchecked(extended.without(f))) c.insert(f);
  }
  return c;
}

LoopsAndBridges loops_and_bridges(const Matroid& m) {
  LoopsAndBridges out;
  const int r = m.rank();
  for (int e : m.ground()) {
    if (m.rank_unchecked(ElementSubset::singleton(e)) == 0) out.loops.insert(e);
    if (m.rank_unchecked(m.ground().without(e)) == r - 1) out.bridges.insert(e);
  }
  return out;
}

void for_each_basis(const Matroid& m, const std::function<bool(ElementSubset)>& visit) {
  const std::vector<int> order = m.ground().indices();
  const int r = m.rank();
  const auto n = order.size();
  // suffix[k] = elements order[k..]
  std::vector<ElementSubset> suffix(n + 1);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1].with(order[k]);

  bool stop = false;
  // Extensions are pruned unless current ∪ suffix still spans, so every
  // branch reaches at least one basis.
  std::function<void(ElementSubset, std::size_t)> walk = [&](ElementSubset current, std::size_t start) {
    if (current.size() == r) {
      if (!visit(current)) stop = true;
      return;
    }
    for (std::size_t k = start; k < n && !stop; ++k) {
      const ElementSubset next = current.with(order[k]);
      if (!m.independent_unchecked(next)) continue;
      if (m.rank_unchecked(next | suffix[k + 1]) < r) continue;
      walk(next, k + 1);
    }
  };
  walk(ElementSubset{}, 0);
}

std::vector<ElementSubset> bases(const Matroid& m, std::size_t cap) {
  std::vector<ElementSubset> out;
  bool over = false;
  for_each_basis(m, [&](ElementSubset b) {
    if (out.size() == cap) {
      over = true;
      return false;
    }
    out.push_back(b);
    return true;
  });
  if (over) throw ResourceError("more than " + std::to_string(cap) + " bases");
  sort_canonical(out);
  return out;
}

std::size_t count_bases(const Matroid& m) {
  std::size_t count = 0;
  for_each_basis(m, [&](ElementSubset) {
    ++count;
    return true;
  });
  return count;
}

Matroid deletion(const Matroid& m, ElementSubset s) {
  require_subset(m, s);
  if (s.empty()) return m;
  return Matroid(m.universe_ptr(), m.ground() - s, m.backend().deletion(s, m.ground()));
}

Matroid contraction(const Matroid& m, ElementSubset s) {
  require_subset(m, s);
  if (s.empty()) return m;
  return Matroid(m.universe_ptr(), m.ground() - s, m.backend().contraction(s, m.ground()));
}

Matroid restriction(const Matroid& m, ElementSubset s) {
  require_subset(m, s);
  return deletion(m, m.ground() - s);
}

Matroid dual(const Matroid& m) {
  if (m.kind() == BackendKind::dual) {
    return Matroid(m.universe_ptr(), m.ground(), static_cast<const detail::DualBackend&>(m.backend()).inner());
  }
  return Matroid(m.universe_ptr(), m.ground(),
                 std::make_shared<detail::DualBackend>(m.backend().shared_from_this()));
}

std::vector<ElementSubset> components(const Matroid& m) {
  std::vector<int> parent(static_cast<std::size_t>(kMaxElements));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto c : circuits(m)) {
    const int root = find(c.min());
    for (int e : c) parent[find(e)] = root;
  }
  std::map<int, ElementSubset> blocks;
  for (int e : m.ground()) blocks[find(e)].insert(e);
  std::vector<ElementSubset> out;
  for (auto& [root, block] : blocks) out.push_back(block);
  std::sort(out.begin(), out.end(), [](ElementSubset a, ElementSubset b) { return a.min() < b.min(); });
  return out;
}

bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

bool satisfies_circuit_elimination(const Matroid& m) {
  const auto cs = circuits(m);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const ElementSubset both = cs[i] | cs[j];
      for (int e : cs[i] & cs[j]) {
        if (m.independent_unchecked(both.without(e))) return false;
      }
    }
  }
  return true;
}

bool same_matroid(const Matroid& a, const Matroid& b) {
  auto ga = a.universe().labels_of(a.ground());
  auto gb = b.universe().labels_of(b.ground());
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  return ga == gb && circuit_labels(a) == circuit_labels(b);
}

Matroid direct_sum(std::span<const Matroid> parts) {
  std::vector<std::string> labels;
  for (const auto& p : parts) {
    for (int e : p.ground()) labels.push_back(p.universe().label(e));
  }
  auto universe = std::make_shared<const GroundSet>(labels);  // rejects shared labels
  const ElementSubset ground = universe->all();

  const bool all_graphic =
      std::all_of(parts.begin(), parts.end(), [](const Matroid& p) { return p.graph_ends() != nullptr; });
  if (all_graphic) {
    std::vector<std::pair<int, int>> ends;
    int offset = 0;
    for (const auto& p : parts) {
      const auto& pe = *p.graph_ends();
      int top = 0;
      for (int e : p.ground()) {
        ends.emplace_back(pe[e].first + offset, pe[e].second + offset);
        top = std::max({top, pe[e].first + 1, pe[e].second + 1});
      }
      offset += top;
    }
    return Matroid(universe, ground, std::make_shared<detail::GraphicBackend>(std::move(ends), ground));
  }

  std::vector<detail::DirectSumBackend::Part> sum_parts;
  int next = 0;
  for (const auto& p : parts) {
    detail::DirectSumBackend::Part part{p, ElementSubset{}, std::vector<int>(labels.size(), -1)};
    for (int e : p.ground()) {
      part.span.insert(next);
      part.to_part[static_cast<std::size_t>(next)] = e;
      ++next;
    }
    sum_parts.push_back(std::move(part));
  }
  return Matroid(universe, ground, std::make_shared<detail::DirectSumBackend>(std::move(sum_parts)));
}

Matroid parallel_connection(const Matroid& m, const Matroid& n, std::string_view p) {
  const auto pm = m.universe().find(p);
  const auto pn = n.universe().find(p);
  if (!pm || !m.ground().contains(*pm) || !pn || !n.ground().contains(*pn)) {
    throw DomainError("element '" + std::string(p) + "' must lie in both ground sets");
  }
  for (int e : n.ground()) {
    if (e == *pn) continue;
    if (auto f = m.universe().find(n.universe().label(e)); f && m.ground().contains(*f)) {
      throw DomainError("ground sets share '" + n.universe().label(e) + "' besides '" + std::string(p) + "'");
    }
  }
  for (const Matroid* side : {&m, &n}) {
    const auto lb = loops_and_bridges(*side);
    const int e = side->universe().index_of(p);
    if (lb.loops.contains(e) || lb.bridges.contains(e)) {
      throw DomainError("'" + std::string(p) + "' is a loop or a bridge in a summand");
    }
  }

  std::vector<std::string> labels = m.universe().labels_of(m.ground());
  for (int e : n.ground()) {
    if (e != *pn) labels.push_back(n.universe().label(e));
  }
  GroundSet ground(labels);
  auto remap = [&](const Matroid& side, ElementSubset s) {
    ElementSubset out;
    for (int e : s) out.insert(ground.index_of(side.universe().label(e)));
    return out;
  };

  std::vector<ElementSubset> through_m, through_n, all;
  for (auto c : circuits(m)) (c.contains(*pm) ? through_m : all).push_back(remap(m, c));
  for (auto d : circuits(n)) (d.contains(*pn) ? through_n : all).push_back(remap(n, d));
  const int pi = ground.index_of(p);
  for (auto c : through_m) all.push_back(c);
  for (auto d : through_n) all.push_back(d);
  for (auto c : through_m) {
    for (auto d : through_n) all.push_back((c | d).without(pi));
  }
  sort_canonical(all);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<ElementSubset> minimal;
  for (auto s : all) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](ElementSubset k) { return k.is_subset_of(s); })) {
      minimal.push_back(s);
    }
  }
  return Matroid::from_circuits(std::move(ground), std::move(minimal));
}

Matroid two_sum(const Matroid& m, const Matroid& n, std::string_view p) {
  Matroid parallel = parallel_connection(m, n, p);
  return deletion(parallel, ElementSubset::singleton(parallel.universe().index_of(p)));
}

}  // namespace cyclesys
