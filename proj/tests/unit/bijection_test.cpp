#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"

namespace cyclesys {
namespace {

TEST(Ordering, NaturalAndFromLabels) {
  const auto cs = testing::digon_triangle_system();
  const auto& m = cs.matroid();
  const auto natural = GroundOrdering::natural(m);
  EXPECT_EQ(natural.elements(), (std::vector<int>{0, 1, 2, 3}));
  const std::vector<std::string> labels{"d", "c", "b", "a"};
  const auto reversed = GroundOrdering::from_labels(m, labels);
  EXPECT_EQ(reversed.position(3), 0);
  EXPECT_EQ(reversed.max_of(m.subset({"a", "d"})), 0);
  EXPECT_EQ(reversed.max_of(ElementSubset{}), -1);
  const std::vector<std::string> missing{"a", "b", "c"};
  EXPECT_THROW(GroundOrdering::from_labels(m, missing), DomainError);
  const std::vector<std::string> repeated{"a", "b", "c", "c"};
  EXPECT_THROW(GroundOrdering::from_labels(m, repeated), DomainError);
}

TEST(Bijection, TriangleWithDigonLeaves) {
  const auto cs = testing::digon_triangle_system();
  const auto& m = cs.matroid();
  const auto xi = GroundOrdering::natural(m);
  const std::map<std::string, CoparkingFunction> expected{
      {"{a,b}", {0, 0}}, {"{a,c}", {1, 0}}, {"{b,c}", {2, 0}}, {"{a,d}", {0, 1}}, {"{b,d}", {1, 1}}};
  for (const auto& [basis, a] : expected) {
    const auto b = basis_to_coparking(cs, xi, m.subset(split_labels(basis.substr(1, basis.size() - 2))));
    EXPECT_EQ(b, a) << basis;
    EXPECT_EQ(m.format(coparking_to_basis(cs, xi, a)), basis);
  }
}

TEST(Bijection, RejectsNonBasesAndNonCoparking) {
  const auto cs = testing::intro_system();
  const auto xi = GroundOrdering::natural(cs.matroid());
  EXPECT_THROW(basis_to_coparking(cs, xi, cs.matroid().subset({"3", "4", "7"})), DomainError);
  EXPECT_THROW(coparking_to_basis(cs, xi, std::vector<int>{2, 2, 0}), DomainError);
}

void expect_round_trip(const CycleSystem& cs, const GroundOrdering& xi) {
  const auto& m = cs.matroid();
  std::set<CoparkingFunction> images;
  for (const auto& basis : bases(m)) {
    const auto a = basis_to_coparking(cs, xi, basis);
    EXPECT_TRUE(verify(cs, a)) << m.format(basis);
    EXPECT_EQ(coparking_to_basis(cs, xi, a), basis);
    images.insert(a);
  }
  const auto all = enumerate_coparking(cs);
  EXPECT_EQ(images, std::set<CoparkingFunction>(all.begin(), all.end()));
}

TEST(Bijection, RoundTripOnExamples) {
  for (const auto& cs : {testing::intro_system(), testing::digon_triangle_system(), testing::cone_over_cycle(4),
                         testing::k5_vertex4_system()}) {
    expect_round_trip(cs, GroundOrdering::natural(cs.matroid()));
    auto order = GroundOrdering::natural(cs.matroid()).elements();
    std::reverse(order.begin(), order.end());
    std::vector<std::string> labels;
    for (int e : order) labels.push_back(cs.matroid().universe().label(e));
    expect_round_trip(cs, GroundOrdering::from_labels(cs.matroid(), labels));
  }
}

TEST(DCTree, LeavesMatchBijection) {
  for (const auto& cs : {testing::intro_system(), testing::digon_triangle_system(), testing::cone_over_complete(4)}) {
    const auto xi = GroundOrdering::natural(cs.matroid());
    const auto tree = build_dc_tree(cs, xi);
    const auto leaves = tree.leaves();
    EXPECT_EQ(leaves.size(), static_cast<std::size_t>(count_bases(cs.matroid())));
    for (const auto& leaf : leaves) {
      EXPECT_TRUE(is_basis(cs.matroid(), leaf.basis));
      EXPECT_EQ(basis_to_coparking(cs, xi, leaf.basis), leaf.a);
    }
  }
}

TEST(DCTree, TriangleWithDigonShape) {
  const auto cs = testing::digon_triangle_system();
  const auto tree = build_dc_tree(cs, GroundOrdering::natural(cs.matroid()));
  EXPECT_EQ(tree.nodes().size(), 9u);
  const auto& root = tree.root();
  EXPECT_FALSE(root.is_leaf());
  EXPECT_EQ(cs.matroid().universe().label(root.pivot), "d");
  EXPECT_EQ(root.container, 1);
  const auto dot = tree.to_dot();
  EXPECT_NE(dot.find("d:C_2"), std::string::npos);
  const auto tsv = tree.to_tsv();
  EXPECT_NE(tsv.find("{a,b}\t(0,0)\t0"), std::string::npos);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 5);
}

TEST(DCTree, IntroDegreeVector) {
  const auto cs = testing::intro_system();
  const auto tree = build_dc_tree(cs, GroundOrdering::natural(cs.matroid()));
  std::vector<CoparkingFunction> vectors;
  for (const auto& leaf : tree.leaves()) vectors.push_back(leaf.a);
  EXPECT_EQ(degree_vector(vectors), (std::vector<std::uint64_t>{1, 3, 6, 7, 4}));
}

TEST(GeneralizedDC, CompleteBipartiteFamily) {
  const auto m = testing::load_graph("k33.edges");
  const std::vector<ElementSubset> family{m.subset({"03", "05", "23", "25"}), m.subset({"03", "05", "13", "15"}),
                                          m.subset({"03", "04", "13", "14"}), m.subset({"03", "04", "23", "24"})};
  const auto xi = GroundOrdering::from_labels(m, split_labels("24<04<15<03<14<23<05<25<13"));
  const auto result = generalized_dc_tree(m, family, xi);
  ASSERT_TRUE(result.tree.has_value());
  EXPECT_FALSE(result.stall.has_value());
  EXPECT_EQ(result.vectors.size(), 81u);
  EXPECT_EQ(std::set<CoparkingFunction>(result.vectors.begin(), result.vectors.end()).size(), 81u);
  EXPECT_EQ(degree_vector(result.vectors), (std::vector<std::uint64_t>{1, 4, 10, 20, 26, 20}));

  auto top = maximal_elements(result.vectors);
  std::sort(top.begin(), top.end());
  std::set<CoparkingFunction> expected;
  for (CoparkingFunction seed : std::vector<CoparkingFunction>{{0, 2, 1, 2}, {0, 2, 0, 3}, {0, 1, 1, 3}, {0, 1, 3, 1},
                                                               {0, 3, 1, 1}}) {
    for (int k = 0; k < 4; ++k) {
      expected.insert(seed);
      std::rotate(seed.begin(), seed.begin() + 1, seed.end());
    }
  }
  EXPECT_EQ(std::set<CoparkingFunction>(top.begin(), top.end()), expected);
  EXPECT_EQ(expected.size(), 20u);
  EXPECT_TRUE(is_order_ideal(result.vectors));
}

TEST(GeneralizedDC, RequiresCorankManyMembers) {
  const auto m = testing::load_graph("k33.edges");
  const std::vector<ElementSubset> family{m.subset({"03", "05", "23", "25"})};
  EXPECT_THROW(generalized_dc_tree(m, family, GroundOrdering::natural(m)), DomainError);
}

TEST(GeneralizedDC, ValidSystemCompletes) {
  const auto cs = testing::intro_system();
  const auto result = generalized_dc_tree(cs.matroid(), cs.cycles(), GroundOrdering::natural(cs.matroid()));
  ASSERT_TRUE(result.tree.has_value());
  EXPECT_EQ(result.vectors.size(), 21u);
}

}  // namespace
}  // namespace cyclesys
