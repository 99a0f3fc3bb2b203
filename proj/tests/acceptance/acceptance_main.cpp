// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned wall
// clock limit. Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

#ifdef CYCLESYS_HAVE_CLI
#include <census.hpp>
#endif

namespace cyclesys {
namespace {

using Clock = std::chrono::steady_clock;

/// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string name;
  std::chrono::milliseconds limit;
  std::function<void(Check&)> body;
};

std::string vec(const std::vector<std::uint64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::set<std::set<std::string>> labelled(const Matroid& m, std::span<const ElementSubset> family) {
  std::set<std::set<std::string>> out;
  for (auto c : family) {
    std::set<std::string> s;
    for (int e : c) s.insert(m.universe().label(e));
    out.insert(s);
  }
  return out;
}

/// σ is a witness against `a` when no i in σ has a_i < |C_i ∩ 𝒞_σ|.
bool is_witness(const std::vector<ElementSubset>& cycles, const std::vector<int>& a, IndexMask sigma) {
  const ElementSubset u = testing::brute_unique_union(cycles, sigma);
  for (int i : ElementSubset{sigma}) {
    if (a[static_cast<std::size_t>(i)] < (cycles[static_cast<std::size_t>(i)] & u).size()) return false;
  }
  return true;
}

/// Every connected graph on at most five vertices, with a system found by search.
std::vector<CycleSystem> small_graph_systems(Check& check) {
  std::vector<CycleSystem> out;
  for (const auto& line : testing::read_graph6_catalog("connected_le5.g6")) {
    const Matroid m = Matroid::graphic(parse_graph6(line));
    auto cs = find_circuit_system(m);
    check.expect(cs.has_value(), "no circuit system found for " + line);
    if (cs) out.push_back(*cs);
  }
  return out;
}

std::vector<CycleSystem> named_corpus() {
  return {testing::intro_system(),
          testing::digon_triangle_system(),
          testing::cone_over_cycle(4),
          testing::cone_over_complete(4),
          testing::cone_over_complete(5),
          two_sum_cycle_system(testing::k4_vertex1_system(), testing::k5_vertex4_system(), "26")};
}

void intro_example(Check& check) {
  const auto cs = testing::intro_system();
  const auto set = enumerate_coparking(cs);
  const std::vector<CoparkingFunction> hasse{
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 2}, {0, 1, 1}, {0, 2, 0},
      {1, 0, 1}, {1, 1, 0}, {2, 0, 0}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1},
      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 1, 2}, {1, 2, 1}, {2, 0, 2}, {2, 1, 1}};
  check.expect(set == hasse, "coparking set differs from the 21-element Hasse diagram");
  // Cover relations of the diagram: exactly 38 unit steps between members.
  std::size_t covers = 0;
  const std::set<CoparkingFunction> members(set.begin(), set.end());
  for (auto a : set) {
    for (auto& x : a) {
      ++x;
      covers += members.count(a);
      --x;
    }
  }
  check.expect(covers == 38, "expected 38 cover relations, got " + std::to_string(covers));
  check.expect(degree_vector(set) == std::vector<std::uint64_t>{1, 3, 6, 7, 4},
               "degree vector " + vec(degree_vector(set)));
  const auto top = maximal_elements(set);
  check.expect(top.size() == 4, "expected 4 maximal elements");
  for (const auto& a : top) check.expect(degree(a) == 4, "maximal element of degree != 4");

  check.expect(verify(cs, std::vector<int>{2, 0, 2}).coparking, "(2,0,2) rejected");
  const std::vector<int> bad{2, 2, 0};
  const auto run = verify(cs, bad);
  check.expect(!run.coparking, "(2,2,0) accepted");
  check.expect(is_witness(cs.cycles(), bad, run.stuck), "reported stuck set is not a witness");
  check.expect(run.stuck == 0b011, "stuck set differs from {1,2}");
  // The full index set is not a witness: a_3 = 0 < |C_3 ∩ 𝒞_[3]| = |{1,5}|.
  check.expect(!is_witness(cs.cycles(), bad, 0b111), "{1,2,3} unexpectedly a witness");
  check.note("(2,2,0) rejected with witness {1,2}; {1,2,3} is not a witness (a_3 = 0 < |{1,5}|)");
}

void main_theorem(Check& check) {
  auto corpus = named_corpus();
  for (auto& cs : small_graph_systems(check)) corpus.push_back(std::move(cs));
  for (const auto& cs : corpus) {
    auto d = degree_vector(cs);
    const auto h = h_vector(cs.matroid());
    d.resize(h.size(), 0);
    check.expect(d == h, cs.format() + ": degree vector " + vec(d) + " vs h-vector " + vec(h));
  }
  check.note(std::to_string(corpus.size()) + " systems");
}

void bijection(Check& check) {
  const auto digon = testing::digon_triangle_system();
  const auto& fm = digon.matroid();
  const auto tree = build_dc_tree(digon, GroundOrdering::from_labels(fm, split_labels("a<b<c<d")));
  std::set<std::pair<std::string, std::string>> leaves;
  for (const auto& leaf : tree.leaves()) leaves.insert({format_vector(leaf.a), fm.format(leaf.basis)});
  const std::set<std::pair<std::string, std::string>> expected{
      {"(0,0)", "{a,b}"}, {"(1,0)", "{a,c}"}, {"(2,0)", "{b,c}"}, {"(0,1)", "{a,d}"}, {"(1,1)", "{b,d}"}};
  check.expect(leaves == expected, "DC-tree leaves differ from the five expected pairs");

  auto corpus = named_corpus();
  for (auto& cs : small_graph_systems(check)) corpus.push_back(std::move(cs));
  std::size_t checked = 0;
  for (const auto& cs : corpus) {
    const auto xi = GroundOrdering::natural(cs.matroid());
    for (const auto& b : bases(cs.matroid())) {
      check.expect(coparking_to_basis(cs, xi, basis_to_coparking(cs, xi, b)) == b, "basis round trip " + cs.format());
      ++checked;
    }
    for (const auto& a : enumerate_coparking(cs)) {
      check.expect(basis_to_coparking(cs, xi, coparking_to_basis(cs, xi, a)) == a,
                   "coparking round trip " + cs.format());
      ++checked;
    }
  }
  check.note(std::to_string(checked) + " round trips");
}

void non_existence(Check& check) {
  SearchOptions options;
  options.mode = SearchMode::count;
  check.expect(search_circuit_systems(testing::load_graph("k33.edges"), options).count == 0, "K3,3 has a system");
  check.expect(search_circuit_systems(Matroid::uniform(2, 4), options).count == 0, "U(2,4) has a system");
}

void uniqueness(Check& check) {
  const Matroid m = testing::load_graph("unique_system.edges");
  check.expect(m.size() == 13, "expected 13 edges");
  SearchOptions options;
  options.mode = SearchMode::all;
  const auto result = search_circuit_systems(m, options);
  check.expect(result.count == 1, "found " + std::to_string(result.count) + " systems");
  if (result.count != 1) return;
  const std::vector<ElementSubset> expected{m.subset({"34", "47", "67", "36"}), m.subset({"14", "45", "15"}),
                                            m.subset({"24", "45", "25"}), m.subset({"47", "45", "57"}),
                                            m.subset({"13", "34", "14"}), m.subset({"23", "34", "24"}),
                                            m.subset({"56", "67", "57"})};
  check.expect(labelled(m, result.system(0)) == labelled(m, expected), "system differs from the expected one");
}

#ifdef CYCLESYS_HAVE_CLI
struct CensusCounts {
  std::vector<std::string> without;
  std::vector<std::string> no_fundamental;
  std::size_t rows = 0;
  std::size_t unknown = 0;
};

CensusCounts census_counts(const std::string& catalog) {
  cli::CensusOptions options;
  options.omit_elapsed = true;
  CensusCounts counts;
  for (const auto& line : testing::read_graph6_catalog(catalog)) {
    const std::string row = cli::census_row(line, options);
    std::vector<std::string> fields;
    std::stringstream in(row);
    for (std::string f; std::getline(in, f, '\t');) fields.push_back(f);
    ++counts.rows;
    if (fields.size() < 5 || fields[3] == "unknown") {
      ++counts.unknown;
      continue;
    }
    if (fields[3] == "false") counts.without.push_back(line);
    else if (fields[4] == "false") counts.no_fundamental.push_back(line);
  }
  return counts;
}
#endif

void six_vertex_census(Check& check) {
#ifdef CYCLESYS_HAVE_CLI
  const auto six = census_counts("connected6.g6");
  check.expect(six.rows == 112, "catalog should list 112 graphs");
  check.expect(six.unknown == 0, "unresolved rows");
  check.expect(six.without.size() == 3, std::to_string(six.without.size()) + " graphs without systems");
  check.expect(six.no_fundamental.size() == 3,
               std::to_string(six.no_fundamental.size()) + " graphs without fundamental systems");
  // The graphs without systems: K3,3 and K3,3 plus one or two edges.
  std::multiset<int> edge_counts;
  bool has_k33 = false;
  for (const auto& line : six.without) {
    const auto g = parse_graph6(line);
    edge_counts.insert(g.edge_count());
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : g.edges()) {
      ++degree[static_cast<std::size_t>(e.u)];
      ++degree[static_cast<std::size_t>(e.v)];
    }
    if (g.edge_count() == 9 && circuits(Matroid::graphic(g)).size() == 15 &&
        std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; })) {
      has_k33 = true;
    }
  }
  check.expect(edge_counts == std::multiset<int>{9, 10, 11}, "graphs without systems should have 9, 10, 11 edges");
  check.expect(has_k33, "K3,3 missing from the graphs without systems");

  const auto small = census_counts("connected_le5.g6");
  check.expect(small.rows == 31, "catalog should list 31 graphs");
  check.expect(small.without.empty() && small.unknown == 0, "some graph on at most 5 vertices lacks a system");
  std::string listing;
  for (const auto& line : six.no_fundamental) listing += (listing.empty() ? "" : " ") + line;
  check.note("no fundamental system: " + listing);
#else
  check.expect(false, "built without the command-line library");
#endif
}

void generalized_tree(Check& check) {
  const Matroid m = testing::load_graph("k33.edges");
  const std::vector<ElementSubset> family{m.subset({"03", "05", "23", "25"}), m.subset({"03", "05", "13", "15"}),
                                          m.subset({"03", "04", "13", "14"}), m.subset({"03", "04", "23", "24"})};
  const auto xi = GroundOrdering::from_labels(m, split_labels("24<04<15<03<14<23<05<25<13"));
  const auto result = generalized_dc_tree(m, family, xi);
  check.expect(!result.stall.has_value(), "construction stalled");
  const auto d = degree_vector(result.vectors);
  check.expect(d == std::vector<std::uint64_t>{1, 4, 10, 20, 26, 20}, "degree sequence " + vec(d));
  check.expect(d == h_vector(m), "degree sequence differs from h-vector " + vec(h_vector(m)));
  check.expect(std::set<CoparkingFunction>(result.vectors.begin(), result.vectors.end()).size() ==
                   result.vectors.size(),
               "repeated leaf labels");
  check.expect(is_order_ideal(result.vectors), "leaf labels are not closed downward");
  check.expect(is_pure(result.vectors), "not pure");
  std::set<CoparkingFunction> expected;
  for (CoparkingFunction seed : std::vector<CoparkingFunction>{{0, 2, 1, 2}, {0, 2, 0, 3}, {0, 1, 1, 3},
                                                               {0, 1, 3, 1}, {0, 3, 1, 1}}) {
    for (int k = 0; k < 4; ++k) {
      expected.insert(seed);
      std::rotate(seed.begin(), seed.begin() + 1, seed.end());
    }
  }
  const auto top = maximal_elements(result.vectors);
  check.expect(std::set<CoparkingFunction>(top.begin(), top.end()) == expected, "maximal vectors differ");
  check.note(std::to_string(result.vectors.size()) + " vectors, " + std::to_string(top.size()) + " maximal");
}

void firing(Check& check) {
  check.expect(!is_m_matrix(firing_matrix(testing::cone_over_complete(4))), "K5 cone matrix is an M-matrix");
  const auto l = firing_matrix(testing::intro_system());
  check.expect(l == IntMatrix{{3, -1, 0}, {-1, 3, -1}, {0, -1, 3}}, "intro firing matrix");
  check.expect(is_m_matrix(l), "intro matrix is not an M-matrix");
}

/// Systems for the property sweep: cone and cographic systems on random
/// loopless multigraphs, plus systems found by search on random graphs.
std::vector<CycleSystem> property_systems(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<CycleSystem> out;
  for (int k = 0; k < count; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto g = testing::random_connected_multigraph(rng, n, n - 1 + static_cast<int>(rng() % 5), 0.0, 0.2);
    out.push_back(cone_circuit_system(g));
    out.push_back(cographic_circuit_system(g, static_cast<int>(rng() % static_cast<unsigned>(n))));
    const auto h = testing::random_connected_multigraph(rng, 2 + static_cast<int>(rng() % 5),
                                                        4 + static_cast<int>(rng() % 6), 0.05, 0.15);
    if (auto found = find_circuit_system(Matroid::graphic(h))) out.push_back(*found);
  }
  return out;
}

void properties(Check& check) {
  constexpr std::uint64_t kSeed = 20240611;
  std::mt19937_64 rng(kSeed);
  std::size_t systems = 0, matroids = 0;

  for (const auto& cs : property_systems(kSeed, 80)) {
    ++systems;
    const auto& m = cs.matroid();
    const auto text = cs.format();
    const auto lb = loops_and_bridges(m);
    const int g = m.corank();

    // Families of g + 1 circuits never have the unique union property.
    const auto all = circuits(m);
    if (all.size() > static_cast<std::size_t>(g) && g < 10) {
      for (int trial = 0; trial < 20; ++trial) {
        auto family = all;
        std::shuffle(family.begin(), family.end(), rng);
        family.resize(static_cast<std::size_t>(g + 1));
        check.expect(!testing::brute_unique_union_property(m, family), "size bound " + text);
      }
    }
    // Every circuit is the unique union of some subfamily.
    if (g <= 14) {
      std::set<ElementSubset, CanonicalLess> unions;
      for (IndexMask sigma = 1; sigma < (IndexMask{1} << g); ++sigma) {
        unions.insert(testing::brute_unique_union(cs.cycles(), sigma));
      }
      for (auto c : all) check.expect(unions.count(c) == 1, "circuit not realized " + text);
    }
    // Non-bridges are covered; connected matroids only use circuits.
    ElementSubset covered;
    for (auto c : cs.cycles()) covered |= c;
    check.expect(covered == m.ground() - lb.bridges, "coverage " + text);
    if (is_connected(m)) {
      for (auto c : cs.cycles()) check.expect(m.rank(c) == c.size() - 1 && is_cycle(m, c), "non-circuit " + text);
    }
    check.expect(circuit_space_rank(m, cs.cycles()) == g, "GF(2) rank " + text);

    const auto set = enumerate_coparking(cs);
    check.expect(is_pure(cs), "purity " + text);
    if (g <= 12) {
      auto brute = testing::brute_coparking_set(cs.cycles());
      auto fast = set;
      std::sort(brute.begin(), brute.end());
      std::sort(fast.begin(), fast.end());
      check.expect(brute == fast, "burning test vs definition " + text);
    }
    const auto candidates = (cs.unique_union() - lb.loops).indices();
    if (!candidates.empty()) {
      const int e = candidates[rng() % candidates.size()];
      const auto del = delete_transform(cs, e);
      const auto con = contract_transform(cs, e);
      check.expect(enumerate_coparking(del.system).size() + enumerate_coparking(con).size() == set.size(),
                   "deletion/contraction partition " + text);
    }
  }

  for (const auto& [name, m] : testing::matroid_zoo(kSeed, 60, 12)) {
    ++matroids;
    const auto t = tutte(m);
    check.expect(m.size() > 12 || t.terms() == testing::brute_tutte(m), "Tutte vs subset sum " + name);
    check.expect(tutte(dual(m)) == t.swapped(), "Tutte duality " + name);
  }
  check.note(std::to_string(systems) + " systems, " + std::to_string(matroids) + " matroids, seed " +
             std::to_string(kSeed));
}

}  // namespace
}  // namespace cyclesys

int main() {
  using namespace cyclesys;
  using std::chrono::milliseconds;
  using std::chrono::minutes;
  using std::chrono::seconds;
  const std::vector<Criterion> criteria{
      {1, "intro example: 21 coparking functions, degrees (1,3,6,7,4)", seconds(1), intro_example},
      {2, "degree vector equals h-vector on the corpus", minutes(5), main_theorem},
      {3, "DC-tree leaves and bijection round trips", minutes(1), bijection},
      {4, "no circuit system on K3,3 and U(2,4)", seconds(10), non_existence},
      {5, "unique circuit system on the 7-vertex, 13-edge graph", minutes(10), uniqueness},
      {6, "connected-graph census on 6 and at most 5 vertices", std::chrono::hours(2), six_vertex_census},
      {7, "generalized DC-tree on K3,3", minutes(1), generalized_tree},
      {8, "firing matrices and the M-matrix test", seconds(1), firing},
      {9, "property sweep with fixed seeds", minutes(10), properties},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const auto elapsed = std::chrono::duration_cast<milliseconds>(Clock::now() - start);
    if (elapsed > c.limit) check.expect(false, "over time limit");
    const bool ok = check.failures().empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << elapsed.count()
              << " ms, limit " << c.limit.count() << " ms]";
    for (const auto& n : check.notes()) std::cout << "; " << n;
    std::cout << '\n';
    for (std::size_t k = 0; k < check.failures().size() && k < 10; ++k) {
      std::cout << "      " << check.failures()[k] << '\n';
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
