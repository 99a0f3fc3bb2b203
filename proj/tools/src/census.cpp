#include "census.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "cyclesys/cyclesys.hpp"

namespace cyclesys::cli {

namespace {

const char* verdict(bool value) { return value ? "true" : "false"; }

std::string checkpoint_file(const std::string& dir) { return (std::filesystem::path(dir) / "census.tsv").string(); }

/// Rows saved by an earlier run, keyed by input position. Lines are
/// `index<TAB>row`; a torn final line (no newline) is ignored.
std::map<std::size_t, std::string> load_checkpoint(const std::string& dir) {
  std::map<std::size_t, std::string> rows;
  std::ifstream in(checkpoint_file(dir));
  if (!in) return rows;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t start = 0;
  while (true) {
    const auto end = text.find('\n', start);
    if (end == std::string::npos) break;
    const std::string line = text.substr(start, end - start);
    start = end + 1;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    try {
      rows[std::stoul(line.substr(0, tab))] = line.substr(tab + 1);
    } catch (const std::exception&) {
      continue;
    }
  }
  return rows;
}

}  // namespace

std::string census_header(bool omit_elapsed) {
  std::string header = "graph6\tcorank\tcircuits\thas_circuit_system\thas_fundamental_circuit_system";
  if (!omit_elapsed) header += "\telapsed_ms";
  return header;
}

std::string census_row(const std::string& graph6, const CensusOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::string row;
  try {
    const Matroid m = Matroid::graphic(parse_graph6(graph6));
    row = graph6 + '\t' + std::to_string(m.corank()) + '\t' + std::to_string(circuits(m).size()) + '\t';
    // A fundamental system settles both questions at once and is usually
    // found within the first few bases.
    if (find_fundamental_circuit_system(m)) {
      row += "true\ttrue";
    } else {
      try {
        SearchBudget budget;
        budget.time_ms = options.budget_ms;
        row += verdict(find_circuit_system(m, budget).has_value());
        row += "\tfalse";
      } catch (const ResourceError&) {
        row += "unknown\tfalse";
      }
    }
  } catch (const Error& e) {
    return graph6 + "\terror\t" + e.what();
  }
  if (!options.omit_elapsed) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    row += '\t' + std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }
  return row;
}

void run_census(const std::vector<std::string>& lines, const CensusOptions& options, std::ostream& out) {
  std::vector<std::string> inputs;
  for (const auto& line : lines) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    inputs.push_back(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
  }

  std::vector<std::string> rows(inputs.size());
  std::vector<bool> done(inputs.size(), false);
  std::ofstream checkpoint;
  if (!options.checkpoint_dir.empty()) {
    std::filesystem::create_directories(options.checkpoint_dir);
    for (const auto& [index, row] : load_checkpoint(options.checkpoint_dir)) {
      if (index < rows.size()) {
        rows[index] = row;
        done[index] = true;
      }
    }
    // Rewrite the loaded rows so a torn last line from an interrupted run is
    // not glued onto the next append.
    checkpoint.open(checkpoint_file(options.checkpoint_dir), std::ios::trunc);
    for (std::size_t index = 0; index < rows.size(); ++index) {
      if (done[index]) checkpoint << index << '\t' << rows[index] << '\n';
    }
    checkpoint.flush();
  }

  std::mutex mutex;
  std::size_t next_to_emit = 0;
  const auto emit_ready = [&] {
    while (next_to_emit < rows.size() && done[next_to_emit]) out << rows[next_to_emit++] << '\n';
    out.flush();
  };

  out << census_header(options.omit_elapsed) << '\n';
  {
    std::lock_guard lock(mutex);
    emit_ready();
  }

  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t index = cursor.fetch_add(1);
      if (index >= inputs.size()) return;
      {
        std::lock_guard lock(mutex);
        if (done[index]) continue;
      }
      std::string row = census_row(inputs[index], options);
      std::lock_guard lock(mutex);
      rows[index] = std::move(row);
      done[index] = true;
      if (checkpoint.is_open()) checkpoint << index << '\t' << rows[index] << '\n' << std::flush;
      emit_ready();
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
}

}  // namespace cyclesys::cli
