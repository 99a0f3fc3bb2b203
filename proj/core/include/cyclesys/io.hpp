#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclesys/cycle_system.hpp"
#include "cyclesys/multigraph.hpp"

namespace cyclesys {

/// Lines `label u v`; blank lines and text after '#' are ignored. Throws
/// ParseError with line and column.
MultiGraph parse_edge_list(std::string_view text);

/// Simple graph from one graph6 line. Edges come in column order
/// (0,1), (0,2), (1,2), (0,3), ... and are labelled "uv" when every vertex
/// is a single digit, "u-v" otherwise.
MultiGraph parse_graph6(std::string_view line);
std::string to_graph6(const MultiGraph& g);

/// Matroid from JSON text: {"ground": [...], "circuits": [[...], ...]},
/// {"type": "graphic", "edges": [[label, u, v], ...]},
/// {"type": "uniform", "rank": m, "size": n} or {"type": "graph6", "data": s}.
Matroid parse_matroid_json(std::string_view text);

/// Resolves a matroid reference: `uniform:M:N`, `graph6:DATA`, a path to a
/// `.json` file, or a path to an edge-list file.
Matroid load_matroid(const std::string& ref);

/// {"matroid": <inline object or reference string>, "cycles": [[labels], ...]}.
/// Relative references resolve against `base_dir`. The system is verified.
CycleSystem parse_cycle_system_json(std::string_view text, const std::string& base_dir = ".");
CycleSystem load_cycle_system(const std::string& path);

/// Cycles written as "3,4,7;2,3,6;1,2,5" (labels separated by commas,
/// cycles by semicolons).
std::vector<ElementSubset> parse_cycle_list(const Matroid& m, std::string_view text);

/// Comma-separated or '<'-separated label list.
std::vector<std::string> split_labels(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace cyclesys
