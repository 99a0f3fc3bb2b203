#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclesys::cli {

struct CensusOptions {
  std::int64_t budget_ms = 0;  // per graph; 0 for none
  int jobs = 1;
  std::string checkpoint_dir;
  bool omit_elapsed = false;
};

/// Tab-separated header matching census_row.
std::string census_header(bool omit_elapsed);

/// One row for a graph6 line: graph6, corank, circuit count,
/// has_circuit_system, has_fundamental_circuit_system and elapsed
/// milliseconds. A malformed line yields `line<TAB>error<TAB>message`.
/// Exhausted budgets show as "unknown".
std::string census_row(const std::string& graph6, const CensusOptions& options);

/// Rows for every non-blank line of `lines`, in input order. With a checkpoint
/// directory, finished rows are appended to `census.tsv` there and reused on
/// the next run.
void run_census(const std::vector<std::string>& lines, const CensusOptions& options, std::ostream& out);

}  // namespace cyclesys::cli
