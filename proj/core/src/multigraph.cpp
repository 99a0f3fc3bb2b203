#include "cyclesys/multigraph.hpp"

#include <numeric>
#include <unordered_set>

#include "cyclesys/errors.hpp"

namespace cyclesys {

void MultiGraph::add_edge(int u, int v, std::string label) {
  if (u < 0 || v < 0) throw DomainError("negative vertex index on edge '" + label + "'");
  if (label.empty()) throw DomainError("empty edge label");
  for (const auto& e : edges_) {
    if (e.label == label) throw DomainError("duplicate edge label '" + label + "'");
  }
  vertex_count_ = std::max({vertex_count_, u + 1, v + 1});
  edges_.push_back(Edge{u, v, std::move(label)});
}

bool MultiGraph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count_;
  for (const auto& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::string> MultiGraph::labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

MultiGraph complete_graph(int n, int first_vertex) {
  MultiGraph g(n);
  const bool short_labels = first_vertex + n - 1 <= 9;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const auto a = std::to_string(first_vertex + i);
      const auto b = std::to_string(first_vertex + j);
      g.add_edge(i, j, short_labels ? a + b : a + "-" + b);
    }
  }
  return g;
}

MultiGraph cone(const MultiGraph& g, const std::string& prefix) {
  MultiGraph out = g;
  const int apex = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) out.add_edge(v, apex, prefix + std::to_string(v));
  return out;
}

}  // namespace cyclesys
