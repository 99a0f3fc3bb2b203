#include "cyclesys/matroid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "cyclesys/errors.hpp"
#include "detail/backend.hpp"

namespace cyclesys {

namespace detail {

namespace {

constexpr int kMaxVertices = 2 * kMaxElements;

struct SmallUnionFind {
  std::array<std::uint8_t, kMaxVertices> parent;

  explicit SmallUnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = static_cast<std::uint8_t>(b);
    return true;
  }
};

// Renumbers the endpoints of ground elements to 0..k-1.
int compress_vertices(std::vector<std::pair<int, int>>& ends, ElementSubset ground) {
  std::vector<int> ids;
  for (int e : ground) {
    ids.push_back(ends[e].first);
    ids.push_back(ends[e].second);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto id = [&](int v) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()); };
  for (int e : ground) ends[e] = {id(ends[e].first), id(ends[e].second)};
  return static_cast<int>(ids.size());
}

std::vector<ElementSubset> minimal_nonempty(std::vector<ElementSubset> sets) {
  sort_canonical(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSubset> out;
  for (auto s : sets) {
    if (s.empty()) continue;
    bool dominated = false;
    for (auto kept : out) {
      if (kept.is_subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

GraphicBackend::GraphicBackend(std::vector<std::pair<int, int>> ends, ElementSubset ground) : ends_(std::move(ends)) {
  vertex_count_ = compress_vertices(ends_, ground);
}

int GraphicBackend::rank(ElementSubset s, ElementSubset) const {
  SmallUnionFind uf(vertex_count_);
  int r = 0;
  for (int e : s) r += uf.unite(ends_[e].first, ends_[e].second);
  return r;
}

bool GraphicBackend::independent(ElementSubset s, ElementSubset) const {
  SmallUnionFind uf(vertex_count_);
  for (int e : s) {
    if (!uf.unite(ends_[e].first, ends_[e].second)) return false;
  }
  return true;
}

std::shared_ptr<const Backend> GraphicBackend::deletion(ElementSubset, ElementSubset) const {
  return shared_from_this();
}

std::shared_ptr<const Backend> GraphicBackend::contraction(ElementSubset s, ElementSubset ground) const {
  SmallUnionFind uf(vertex_count_);
  for (int e : s) uf.unite(ends_[e].first, ends_[e].second);
  auto ends = ends_;
  const ElementSubset rest = ground - s;
  for (int e : rest) ends[e] = {uf.find(ends[e].first), uf.find(ends[e].second)};
  return std::make_shared<GraphicBackend>(std::move(ends), rest);
}

std::optional<std::vector<ElementSubset>> GraphicBackend::circuits(ElementSubset ground) const {
  // Simple cycles, each rooted at its smallest vertex; both traversal
  // directions are produced and deduplicated.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(vertex_count_));
  std::unordered_set<ElementSubset, ElementSubsetHash> found;
  for (int e : ground) {
    auto [u, v] = ends_[e];
    if (u == v) {
      found.insert(ElementSubset::singleton(e));
      continue;
    }
    adj[u].push_back({e, v});
    adj[v].push_back({e, u});
  }
  std::vector<char> on_path(static_cast<std::size_t>(vertex_count_), 0);
  std::function<void(int, int, ElementSubset)> walk = [&](int start, int v, ElementSubset path) {
    for (auto [e, w] : adj[v]) {
      if (path.contains(e)) continue;
      if (w == start) {
        if (!path.empty()) found.insert(path.with(e));
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        walk(start, w, path.with(e));
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < vertex_count_; ++s) {
    on_path[s] = 1;
    walk(s, s, ElementSubset{});
    on_path[s] = 0;
  }
  return std::vector<ElementSubset>(found.begin(), found.end());
}

std::shared_ptr<const Backend> UniformBackend::deletion(ElementSubset s, ElementSubset ground) const {
  return std::make_shared<UniformBackend>(std::min(rank_, (ground - s).size()));
}

std::shared_ptr<const Backend> UniformBackend::contraction(ElementSubset s, ElementSubset) const {
  return std::make_shared<UniformBackend>(rank_ - std::min(s.size(), rank_));
}

bool CircuitBackend::independent(ElementSubset s, ElementSubset) const {
  for (auto c : circuits_) {
    if (c.is_subset_of(s)) return false;
  }
  return true;
}

int CircuitBackend::rank(ElementSubset s, ElementSubset ground) const {
  ElementSubset basis;
  for (int e : s) {
    if (independent(basis.with(e), ground)) basis.insert(e);
  }
  return basis.size();
}

std::shared_ptr<const Backend> CircuitBackend::deletion(ElementSubset s, ElementSubset) const {
  std::vector<ElementSubset> kept;
  for (auto c : circuits_) {
    if (!c.intersects(s)) kept.push_back(c);
  }
  return std::make_shared<CircuitBackend>(std::move(kept));
}

std::shared_ptr<const Backend> CircuitBackend::contraction(ElementSubset s, ElementSubset) const {
  std::vector<ElementSubset> shrunk;
  shrunk.reserve(circuits_.size());
  for (auto c : circuits_) shrunk.push_back(c - s);
  return std::make_shared<CircuitBackend>(minimal_nonempty(std::move(shrunk)));
}

int DualBackend::rank(ElementSubset s, ElementSubset ground) const {
  return s.size() + inner_->rank(ground - s, ground) - inner_->rank(ground, ground);
}

std::shared_ptr<const Backend> DualBackend::deletion(ElementSubset s, ElementSubset ground) const {
  return std::make_shared<DualBackend>(inner_->contraction(s, ground));
}

std::shared_ptr<const Backend> DualBackend::contraction(ElementSubset s, ElementSubset ground) const {
  return std::make_shared<DualBackend>(inner_->deletion(s, ground));
}

ElementSubset DirectSumBackend::to_part(const Part& p, ElementSubset s) {
  ElementSubset out;
  for (int e : s & p.span) out.insert(p.to_part[static_cast<std::size_t>(e)]);
  return out;
}

int DirectSumBackend::rank(ElementSubset s, ElementSubset) const {
  int r = 0;
  for (const auto& p : parts_) r += p.matroid.rank_unchecked(to_part(p, s));
  return r;
}

std::shared_ptr<const Backend> DirectSumBackend::deletion(ElementSubset s, ElementSubset) const {
  auto parts = parts_;
  for (auto& p : parts) {
    p.matroid = cyclesys::deletion(p.matroid, to_part(p, s));
    p.span -= s;
  }
  return std::make_shared<DirectSumBackend>(std::move(parts));
}

std::shared_ptr<const Backend> DirectSumBackend::contraction(ElementSubset s, ElementSubset) const {
  auto parts = parts_;
  for (auto& p : parts) {
    p.matroid = cyclesys::contraction(p.matroid, to_part(p, s));
    p.span -= s;
  }
  return std::make_shared<DirectSumBackend>(std::move(parts));
}

}  // namespace detail

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::graphic: return "graphic";
    case BackendKind::uniform: return "uniform";
    case BackendKind::circuit_defined: return "circuit-defined";
    case BackendKind::dual: return "dual";
    case BackendKind::direct_sum: return "direct-sum";
  }
  return "unknown";
}

Matroid::Matroid(std::shared_ptr<const GroundSet> universe, ElementSubset ground,
                 std::shared_ptr<const detail::Backend> backend)
    : universe_(std::move(universe)), ground_(ground), backend_(std::move(backend)) {}

Matroid Matroid::graphic(const MultiGraph& g) {
  auto universe = std::make_shared<const GroundSet>(g.labels());
  std::vector<std::pair<int, int>> ends;
  ends.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const auto& e : g.edges()) ends.emplace_back(e.u, e.v);
  const ElementSubset ground = universe->all();
  return Matroid(universe, ground, std::make_shared<detail::GraphicBackend>(std::move(ends), ground));
}

Matroid Matroid::uniform(int rank, int size) { return uniform(rank, GroundSet::numbered(size)); }

Matroid Matroid::uniform(int rank, GroundSet ground) {
  if (rank < 0 || rank > ground.size()) {
    throw DomainError("uniform matroid needs 0 <= rank <= size, got U(" + std::to_string(rank) + "," +
                      std::to_string(ground.size()) + ")");
  }
  auto universe = std::make_shared<const GroundSet>(std::move(ground));
  return Matroid(universe, universe->all(), std::make_shared<detail::UniformBackend>(rank));
}

Matroid Matroid::from_circuits(GroundSet ground, std::vector<ElementSubset> circuits) {
  const ElementSubset all = ground.all();
  for (auto c : circuits) {
    if (c.empty()) throw DomainError("the empty set cannot be a circuit");
    if (!c.is_subset_of(all)) throw DomainError("circuit uses elements outside the ground set");
  }
  sort_canonical(circuits);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (circuits[j].is_subset_of(circuits[i])) {
        throw DomainError("circuit " + ground.format(circuits[j]) + " is contained in " + ground.format(circuits[i]));
      }
    }
  }
  auto universe = std::make_shared<const GroundSet>(std::move(ground));
  return Matroid(universe, universe->all(), std::make_shared<detail::CircuitBackend>(std::move(circuits)));
}

BackendKind Matroid::kind() const { return backend_->kind(); }

int Matroid::rank(ElementSubset s) const {
  if (!s.is_subset_of(ground_)) {
    throw DomainError("subset " + format(s - ground_) + " is not in the ground set");
  }
  return backend_->rank(s, ground_);
}

int Matroid::rank_unchecked(ElementSubset s) const { return backend_->rank(s, ground_); }

bool Matroid::independent_unchecked(ElementSubset s) const { return backend_->independent(s, ground_); }

ElementSubset Matroid::subset(std::initializer_list<std::string_view> labels) const {
  ElementSubset s = universe_->subset(labels);
  if (!s.is_subset_of(ground_)) throw DomainError("labels " + format(s - ground_) + " are not in the ground set");
  return s;
}

ElementSubset Matroid::subset(std::span<const std::string> labels) const {
  ElementSubset s = universe_->subset(labels);
  if (!s.is_subset_of(ground_)) throw DomainError("labels " + format(s - ground_) + " are not in the ground set");
  return s;
}

const std::vector<std::pair<int, int>>* Matroid::graph_ends() const { return backend_->graph_ends(); }

}  // namespace cyclesys
