#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "census.hpp"
#include "cyclesys/cyclesys.hpp"

namespace cyclesys::cli {

namespace {

using nlohmann::json;

json labels_of(const Matroid& m, ElementSubset s) {
  json out = json::array();
  for (int e : s) out.push_back(m.universe().label(e));
  return out;
}

json family_of(const Matroid& m, std::span<const ElementSubset> family) {
  json out = json::array();
  for (auto c : family) out.push_back(labels_of(m, c));
  return out;
}

std::string one_based(IndexMask sigma) {
  std::string out = "{";
  for (int i : ElementSubset{sigma}) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  return out + "}";
}

std::vector<int> parse_vector(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::string cleaned;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
  }
  if (cleaned.empty()) return out;
  std::stringstream in(cleaned);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError("bad vector entry '" + token + "'");
    }
  }
  return out;
}

/// Where a command gets its cycle system from.
struct SystemSource {
  std::string input;    // matroid reference
  std::string system;   // cycle-system JSON file
  std::string cycles;   // "3,4,7;2,3,6"
};

void add_system_options(CLI::App* cmd, SystemSource& src, bool input_required) {
  auto* input = cmd->add_option("input", src.input, "Matroid: edge list, .g6, .json, uniform:M:N or graph6:DATA");
  if (input_required) input->required();
  cmd->add_option("--system", src.system, "Cycle-system JSON file");
  cmd->add_option("--cycles", src.cycles, "Cycles as \"3,4,7;2,3,6\"");
}

/// Supplied system when given, otherwise the first one a search finds.
/// `supplied` reports which.
std::optional<CycleSystem> resolve_system(const SystemSource& src, bool* supplied = nullptr) {
  if (supplied) *supplied = true;
  if (!src.system.empty()) return load_cycle_system(src.system);
  if (src.input.empty()) throw ParseError("need an input matroid or --system");
  const Matroid m = load_matroid(src.input);
  if (!src.cycles.empty()) return CycleSystem(m, parse_cycle_list(m, src.cycles));
  if (supplied) *supplied = false;
  return find_circuit_system(m);
}

CycleSystem require_system(const SystemSource& src) {
  auto cs = resolve_system(src);
  if (!cs) throw InvalidSystemError("the matroid has no circuit system");
  return *cs;
}

Matroid resolve_matroid(const SystemSource& src) {
  if (!src.input.empty()) return load_matroid(src.input);
  if (!src.system.empty()) return load_cycle_system(src.system).matroid();
  throw ParseError("need an input matroid or --system");
}

GroundOrdering resolve_ordering(const Matroid& m, const std::string& text) {
  if (text.empty()) return GroundOrdering::natural(m);
  const auto labels = split_labels(text);
  return GroundOrdering::from_labels(m, labels);
}

// circuits ------------------------------------------------------------------

int cmd_circuits(const std::string& input, const std::string& format, std::ostream& out) {
  const Matroid m = load_matroid(input);
  for (auto c : circuits(m)) {
    if (format == "tsv") out << m.format(c) << '\n';
    else out << labels_of(m, c).dump() << '\n';
  }
  return kOk;
}

// search --------------------------------------------------------------------

struct SearchArgs {
  std::string input;
  std::string mode = "all";
  std::string strategy = "levels";
  bool count = false;
  bool check_theorems = false;
  std::int64_t budget_ms = 0;
  std::size_t max_level_size = 0;
  std::string checkpoint;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const Matroid m = load_matroid(args.input);
  SearchOptions options;
  options.mode = args.count ? SearchMode::count
                 : args.mode == "first" ? SearchMode::first
                 : args.mode == "count" ? SearchMode::count
                                        : SearchMode::all;
  options.strategy = args.strategy == "depth-first" ? SearchStrategy::depth_first : SearchStrategy::levels;
  options.budget.time_ms = args.budget_ms;
  options.budget.max_level_size = args.max_level_size;
  options.checkpoint_dir = args.checkpoint;

  const auto all = circuits(m);
  const bool connected = is_connected(m);
  bool theorems_hold = true;
  if (options.mode != SearchMode::count) {
    options.on_system = [&](const std::vector<int>& indices) {
      std::vector<ElementSubset> family;
      for (int k : indices) family.push_back(all[static_cast<std::size_t>(k)]);
      if (args.check_theorems) {
        // Members of a system on a connected matroid are circuits (always the
        // case here), and every system spans the circuit space.
        if (circuit_space_rank(m, family) != static_cast<int>(family.size())) {
          err << "circuit-space rank check failed for " << family_of(m, family).dump() << '\n';
          theorems_hold = false;
        }
        if (!connected && !is_cycle_system(m, family)) theorems_hold = false;
      }
      out << family_of(m, family).dump() << '\n';
      return true;
    };
  }
  try {
    const auto result = search_circuit_systems(m, options);
    if (options.mode == SearchMode::count) out << result.count << '\n';
  } catch (const ResourceError& e) {
    err << "budget exhausted: " << e.what();
    if (e.last_completed_level() >= 0) err << " (last completed level " << e.last_completed_level() << ")";
    if (!args.checkpoint.empty()) err << "; checkpoint in " << args.checkpoint;
    err << '\n';
    return kBudget;
  }
  return theorems_hold ? kOk : kInternal;
}

// report --------------------------------------------------------------------

struct ReportArgs {
  SystemSource src;
  std::string ordering;
  std::uint64_t seed = 1;
  std::size_t max_table = 5000;
};

json matrix_json(const IntMatrix& l) {
  json out = json::array();
  for (const auto& row : l) out.push_back(row);
  return out;
}

int cmd_report(const ReportArgs& args, std::ostream& out) {
  bool supplied = false;
  std::optional<CycleSystem> cs;
  Matroid m = resolve_matroid(args.src);
  if (!args.src.system.empty() || !args.src.cycles.empty()) {
    cs = resolve_system(args.src, &supplied);
    m = cs->matroid();
  } else {
    cs = find_circuit_system(m);
  }

  json report;
  report["matroid"] = {{"size", m.size()}, {"rank", m.rank()}, {"corank", m.corank()},
                       {"kind", std::string(to_string(m.kind()))}, {"ground", labels_of(m, m.ground())}};
  const auto t = tutte(m);
  json terms = json::array();
  for (const auto& [key, c] : t.terms()) terms.push_back({key.first, key.second, c});
  report["tutte"] = {{"text", t.format()}, {"terms", terms}};
  report["h_vector"] = h_vector(t, m.rank());
  report["f_vector"] = f_vector(m);
  report["bases"] = t.evaluate(1, 1);
  report["has_circuit_system"] = cs.has_value();
  report["system_source"] = !cs ? "none" : supplied ? "supplied" : "search";
  if (!cs) {
    out << report.dump(2) << '\n';
    return kOk;
  }

  const auto set = enumerate_coparking(*cs);
  std::vector<std::string> maximal;
  for (const auto& a : maximal_elements(set)) maximal.push_back(format_vector(a));
  const auto firing = firing_matrix(*cs);
  report["system"] = family_of(m, cs->cycles());
  report["fundamental"] = is_fundamental(*cs);
  report["degree_vector"] = degree_vector(set);
  report["coparking_count"] = set.size();
  report["maximal"] = maximal;
  report["max_degree"] = max_degree(*cs);
  report["pure"] = is_pure(set);
  report["main_theorem"] = check_main_theorem(*cs);
  report["firing_matrix"] = matrix_json(firing);
  report["m_matrix"] = is_m_matrix(firing);

  // Randomized removal orders must reproduce the canonical verdicts.
  std::mt19937_64 rng(args.seed);
  bool orders_agree = true;
  for (const auto& a : set) {
    const auto pick = [&](IndexMask eligible) {
      const auto options = ElementSubset{eligible}.indices();
      return options[rng() % options.size()];
    };
    orders_agree = orders_agree && verify_with_choice(cs->cycles(), a, pick).coparking;
  }
  report["removal_order_check"] = {{"seed", args.seed}, {"agree", orders_agree}};

  const auto xi = resolve_ordering(m, args.ordering);
  json order = json::array();
  for (int e : xi.elements()) order.push_back(m.universe().label(e));
  report["ordering"] = order;
  if (set.size() <= args.max_table) {
    json table = json::array();
    for (const auto& b : bases(m)) {
      const auto a = basis_to_coparking(*cs, xi, b);
      table.push_back({{"basis", labels_of(m, b)}, {"coparking", format_vector(a)}, {"degree", degree(a)}});
    }
    report["bijection"] = table;
  }
  out << report.dump(2) << '\n';
  return kOk;
}

// coparking -----------------------------------------------------------------

int cmd_coparking_verify(const SystemSource& src, const std::string& vector, std::ostream& out) {
  const auto cs = require_system(src);
  const auto a = parse_vector(vector);
  const auto result = verify(cs, a);
  json j{{"vector", format_vector(a)}, {"coparking", result.coparking}};
  if (result.coparking) {
    std::vector<int> order;
    for (int i : result.removal_order) order.push_back(i + 1);
    j["removal_order"] = order;
  } else {
    j["witness"] = one_based(result.stuck);
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_coparking_enumerate(const SystemSource& src, const std::string& format, std::ostream& out) {
  const auto cs = require_system(src);
  const auto set = enumerate_coparking(cs);
  if (format == "dot") {
    out << hasse_dot(set);
  } else if (format == "json") {
    json j{{"system", family_of(cs.matroid(), cs.cycles())}, {"count", set.size()},
           {"degree_vector", degree_vector(set)}, {"vectors", set}};
    out << j.dump() << '\n';
  } else {
    for (const auto& a : set) out << format_vector(a) << '\t' << degree(a) << '\n';
  }
  return kOk;
}

// bijection -----------------------------------------------------------------

int cmd_to_coparking(const SystemSource& src, const std::string& ordering, const std::string& basis,
                     std::ostream& out) {
  const auto cs = require_system(src);
  const auto xi = resolve_ordering(cs.matroid(), ordering);
  const auto labels = split_labels(basis);
  out << format_vector(basis_to_coparking(cs, xi, cs.matroid().subset(labels))) << '\n';
  return kOk;
}

int cmd_to_basis(const SystemSource& src, const std::string& ordering, const std::string& vector,
                 std::ostream& out) {
  const auto cs = require_system(src);
  const auto xi = resolve_ordering(cs.matroid(), ordering);
  out << cs.matroid().format(coparking_to_basis(cs, xi, parse_vector(vector))) << '\n';
  return kOk;
}

// tutte, dctree ---------------------------------------------------------------

int cmd_tutte(const std::string& input, const std::string& format, std::ostream& out) {
  const Matroid m = load_matroid(input);
  const auto t = tutte(m);
  if (format == "json") {
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) terms.push_back({key.first, key.second, c});
    out << json{{"text", t.format()}, {"terms", terms}, {"h_vector", h_vector(t, m.rank())}}.dump() << '\n';
  } else {
    out << t.format() << '\n';
  }
  return kOk;
}

int cmd_dctree(const SystemSource& src, const std::string& ordering, const std::string& format, std::ostream& out) {
  const auto cs = require_system(src);
  const auto tree = build_dc_tree(cs, resolve_ordering(cs.matroid(), ordering));
  out << (format == "tsv" ? tree.to_tsv() : tree.to_dot());
  return kOk;
}

int cmd_census(const std::string& path, CensusOptions options, std::ostream& out) {
  const std::string text = read_file(path);
  std::vector<std::string> lines;
  std::stringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  run_census(lines, options, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle systems and coparking functions of matroids", "cyclesys"};
  app.require_subcommand(1);

  std::string input, format;

  auto* circuits_cmd = app.add_subcommand("circuits", "List circuits, one JSON array per line");
  circuits_cmd->add_option("input", input, "Matroid reference")->required();
  circuits_cmd->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Enumerate circuit systems");
  search_cmd->add_option("input", search.input, "Matroid reference")->required();
  search_cmd->add_option("--mode", search.mode, "first, all or count")
      ->check(CLI::IsMember({"first", "all", "count"}));
  search_cmd->add_option("--strategy", search.strategy, "levels or depth-first")
      ->check(CLI::IsMember({"levels", "depth-first"}));
  search_cmd->add_flag("--count", search.count, "Print only the number of systems");
  search_cmd->add_flag("--check-theorems", search.check_theorems, "Re-check structural facts on every hit");
  search_cmd->add_option("--budget-ms", search.budget_ms, "Time budget")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--max-level-size", search.max_level_size, "Cap on the size of any level");
  search_cmd->add_option("--checkpoint", search.checkpoint, "Checkpoint directory");

  std::string census_path;
  CensusOptions census;
  auto* census_cmd = app.add_subcommand("census", "Per-graph report for a graph6 catalog");
  census_cmd->add_option("catalog", census_path, "File of graph6 lines")->required();
  census_cmd->add_option("--budget-ms", census.budget_ms, "Search budget per graph")->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--checkpoint", census.checkpoint_dir, "Checkpoint directory");
  census_cmd->add_option("--jobs", census.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_flag("--omit-elapsed", census.omit_elapsed, "Drop the timing column");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "JSON bundle of invariants for a matroid and cycle system");
  add_system_options(report_cmd, report.src, false);
  report_cmd->add_option("--ordering", report.ordering, "Ground order, e.g. \"a<b<c<d\"");
  report_cmd->add_option("--seed", report.seed, "Seed for the removal-order cross-check");
  report_cmd->add_option("--max-table", report.max_table, "Largest bijection table to print");

  SystemSource src;
  std::string vector, basis, ordering;
  auto* coparking_cmd = app.add_subcommand("coparking", "Coparking functions");
  coparking_cmd->require_subcommand(1);
  auto* verify_cmd = coparking_cmd->add_subcommand("verify", "Run the burning test on one vector");
  add_system_options(verify_cmd, src, false);
  verify_cmd->add_option("--vector", vector, "e.g. 2,0,2")->required();
  auto* enumerate_cmd = coparking_cmd->add_subcommand("enumerate", "List all coparking functions");
  add_system_options(enumerate_cmd, src, false);
  enumerate_cmd->add_option("--format", format, "tsv, json or dot")->check(CLI::IsMember({"tsv", "json", "dot"}));

  auto* bijection_cmd = app.add_subcommand("bijection", "Basis and coparking function conversions");
  bijection_cmd->require_subcommand(1);
  auto* to_coparking_cmd = bijection_cmd->add_subcommand("to-coparking", "Basis to coparking function");
  add_system_options(to_coparking_cmd, src, false);
  to_coparking_cmd->add_option("--basis", basis, "Basis labels, comma separated")->required();
  to_coparking_cmd->add_option("--ordering", ordering, "Ground order");
  auto* to_basis_cmd = bijection_cmd->add_subcommand("to-basis", "Coparking function to basis");
  add_system_options(to_basis_cmd, src, false);
  to_basis_cmd->add_option("--vector", vector, "e.g. 2,0,2")->required();
  to_basis_cmd->add_option("--ordering", ordering, "Ground order");

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  tutte_cmd->add_option("input", input, "Matroid reference")->required();
  tutte_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* dctree_cmd = app.add_subcommand("dctree", "Deletion-contraction tree of a cycle system");
  add_system_options(dctree_cmd, src, false);
  dctree_cmd->add_option("--ordering", ordering, "Ground order");
  dctree_cmd->add_option("--format", format, "dot or tsv")->check(CLI::IsMember({"dot", "tsv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*circuits_cmd) return cmd_circuits(input, format, out);
    if (*search_cmd) return cmd_search(search, out, err);
    if (*census_cmd) return cmd_census(census_path, census, out);
    if (*report_cmd) return cmd_report(report, out);
    if (*verify_cmd) return cmd_coparking_verify(src, vector, out);
    if (*enumerate_cmd) return cmd_coparking_enumerate(src, format, out);
    if (*to_coparking_cmd) return cmd_to_coparking(src, ordering, basis, out);
    if (*to_basis_cmd) return cmd_to_basis(src, ordering, vector, out);
    if (*tutte_cmd) return cmd_tutte(input, format, out);
    if (*dctree_cmd) return cmd_dctree(src, ordering, format, out);
  } catch (const InvalidSystemError& e) {
    err << "invalid cycle system: " << e.what();
    if (e.sigma() != 0) err << " (sigma = " << one_based(e.sigma()) << ")";
    err << '\n';
    return kInvalidSystem;
  } catch (const ResourceError& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace cyclesys::cli
