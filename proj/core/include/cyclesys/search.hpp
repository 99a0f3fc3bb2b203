#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyclesys/cycle_system.hpp"

namespace cyclesys {

enum class SearchMode { first, all, count };

/// How `all`/`count` explore families. `levels` builds L_1, ..., L_g; a family
/// of k+1 circuits enters L_{k+1} when all its k-subsets are in L_k and its
/// unique union is dependent. `depth_first` extends one family at a time and
/// keeps the unique unions of all its sub-families in a table.
enum class SearchStrategy { levels, depth_first };

struct SearchBudget {
  std::int64_t time_ms = 0;          // 0: unlimited
  std::size_t max_level_size = 0;    // 0: unlimited
};

struct SearchOptions {
  SearchMode mode = SearchMode::all;
  /// Ignored in `first` mode, which is always depth-first.
  SearchStrategy strategy = SearchStrategy::levels;
  SearchBudget budget;
  /// Directory for completed levels; an interrupted run resumes from it.
  /// Only the level strategy checkpoints.
  std::string checkpoint_dir;
  /// Called for every circuit system found (circuit indices, increasing).
  /// Returning false stops the search.
  std::function<bool(const std::vector<int>&)> on_system;
};

struct SearchResult {
  /// Canonical circuit list of the matroid; systems index into it.
  std::vector<ElementSubset> circuits;
  /// Found systems as sorted circuit indices (kept in `first` and `all` modes).
  std::vector<std::vector<int>> systems;
  std::uint64_t count = 0;
  /// |L_k| for each completed level k = 1, 2, ... (level strategy only).
  std::vector<std::size_t> level_sizes;
  /// Level loaded from a checkpoint, 0 when starting fresh.
  int resumed_level = 0;

  std::vector<ElementSubset> system(std::size_t i) const;
};

/// Exhaustive circuit-system search. Throws ResourceError when the budget runs
/// out; its last_completed_level() reports the highest finished level.
SearchResult search_circuit_systems(const Matroid& m, const SearchOptions& options = {});

/// Searches each connected component separately and joins the results; a
/// matroid has a circuit system iff every component has one.
std::optional<CycleSystem> find_circuit_system(const Matroid& m, const SearchBudget& budget = {});

}  // namespace cyclesys
