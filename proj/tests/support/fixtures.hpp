#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cyclesys/cyclesys.hpp"

namespace cyclesys::testing {

std::string data_path(const std::string& name);

Matroid load_graph(const std::string& name);

/// Example systems used across suites.
CycleSystem intro_system();
CycleSystem digon_triangle_system();

/// Cone over the cycle C_n and over K_n with their cone systems.
CycleSystem cone_over_cycle(int n);
CycleSystem cone_over_complete(int n);

/// K4 on {1,2,6,7} and K5 on {2,3,4,5,6} with vertex-1 / vertex-4 triangles.
CycleSystem k4_vertex1_system();
CycleSystem k5_vertex4_system();

/// Reads a graph6 catalog, skipping blank lines.
std::vector<std::string> read_graph6_catalog(const std::string& name);

/// Seeded random connected multigraph on n vertices with m edges. Loops and
/// parallel edges appear with the given probabilities.
MultiGraph random_connected_multigraph(std::mt19937_64& rng, int n, int m, double loop_p = 0.0,
                                       double parallel_p = 0.15);

/// Matroid zoo for property suites: graphs, their duals, uniform matroids.
struct ZooEntry {
  std::string name;
  Matroid matroid;
};
std::vector<ZooEntry> matroid_zoo(std::uint64_t seed, int count, int max_edges);

}  // namespace cyclesys::testing
