#pragma once

#include <string>
#include <vector>

namespace cyclesys {

struct Edge {
  int u = 0;
  int v = 0;
  std::string label;
};

/// Undirected multigraph on vertices 0..vertex_count-1. Loops and parallel
/// edges are allowed; edge labels must be distinct.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count) : vertex_count_(vertex_count) {}

  /// Grows the vertex range if needed. Throws DomainError on a negative
  /// endpoint or a repeated label.
  void add_edge(int u, int v, std::string label);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  bool is_connected() const;
  std::vector<std::string> labels() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Complete graph with edge labels "ij" (or "i-j" once labels exceed one
/// digit), vertices numbered from `first_vertex`.
MultiGraph complete_graph(int n, int first_vertex = 0);

/// Cone(G): a new vertex joined to every vertex v of G by an edge labelled
/// `prefix + v`.
MultiGraph cone(const MultiGraph& g, const std::string& prefix = "f");

}  // namespace cyclesys
