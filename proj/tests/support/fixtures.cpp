#include "fixtures.hpp"

#include <fstream>

namespace cyclesys::testing {

std::string data_path(const std::string& name) { return std::string(CYCLESYS_TEST_DATA_DIR) + "/" + name; }

Matroid load_graph(const std::string& name) { return load_matroid(data_path(name)); }

CycleSystem intro_system() { return load_cycle_system(data_path("intro_system.json")); }

CycleSystem digon_triangle_system() { return load_cycle_system(data_path("digon_triangle_system.json")); }

CycleSystem cone_over_cycle(int n) {
  MultiGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, "c" + std::to_string(v));
  return cone_circuit_system(g);
}

CycleSystem cone_over_complete(int n) { return cone_circuit_system(complete_graph(n)); }

namespace {

Matroid labelled_complete(const std::vector<int>& vertices) {
  MultiGraph g;
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const int a = std::min(vertices[i], vertices[j]), b = std::max(vertices[i], vertices[j]);
      g.add_edge(a, b, std::to_string(a) + std::to_string(b));
    }
  }
  return Matroid::graphic(g);
}

std::string edge(int a, int b) { return std::to_string(std::min(a, b)) + std::to_string(std::max(a, b)); }

CycleSystem triangles_at(const std::vector<int>& vertices, int apex) {
  Matroid m = labelled_complete(vertices);
  std::vector<int> rest;
  for (int v : vertices) {
    if (v != apex) rest.push_back(v);
  }
  std::vector<ElementSubset> cycles;
  for (std::size_t j = 1; j < rest.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      cycles.push_back(m.subset({edge(apex, rest[i]), edge(rest[i], rest[j]), edge(apex, rest[j])}));
    }
  }
  return CycleSystem(std::move(m), std::move(cycles));
}

}  // namespace

CycleSystem k4_vertex1_system() { return triangles_at({1, 2, 6, 7}, 1); }

CycleSystem k5_vertex4_system() { return triangles_at({2, 3, 4, 5, 6}, 4); }

std::vector<std::string> read_graph6_catalog(const std::string& name) {
  std::ifstream in(data_path(name));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

MultiGraph random_connected_multigraph(std::mt19937_64& rng, int n, int m, double loop_p, double parallel_p) {
  MultiGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int label = 0;
  auto next_label = [&] { return "e" + std::to_string(label++); };
  // Random spanning tree first so the graph is connected.
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v, next_label());
  }
  std::uniform_int_distribution<int> vertex(0, n - 1);
  while (g.edge_count() < m) {
    const double roll = coin(rng);
    if (roll < loop_p) {
      const int v = vertex(rng);
      g.add_edge(v, v, next_label());
    } else if (roll < loop_p + parallel_p && g.edge_count() > 0) {
      std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
      const Edge copy = g.edge(pick(rng));
      g.add_edge(copy.u, copy.v, next_label());
    } else {
      const int u = vertex(rng), v = vertex(rng);
      if (u != v) g.add_edge(u, v, next_label());
    }
  }
  return g;
}

std::vector<ZooEntry> matroid_zoo(std::uint64_t seed, int count, int max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<ZooEntry> out;
  out.push_back({"U(2,4)", Matroid::uniform(2, 4)});
  out.push_back({"U(1,3)", Matroid::uniform(1, 3)});
  out.push_back({"U(3,5)", Matroid::uniform(3, 5)});
  out.push_back({"free3", Matroid::free(3)});
  for (int k = 0; k < count; ++k) {
    std::uniform_int_distribution<int> vertices(2, 6);
    const int n = vertices(rng);
    std::uniform_int_distribution<int> edges(n - 1, std::max(n - 1, max_edges));
    const MultiGraph g = random_connected_multigraph(rng, n, edges(rng), 0.05, 0.15);
    Matroid m = Matroid::graphic(g);
    out.push_back({"graph" + std::to_string(k), m});
    if (k % 3 == 0) out.push_back({"cograph" + std::to_string(k), dual(m)});
  }
  return out;
}

}  // namespace cyclesys::testing
