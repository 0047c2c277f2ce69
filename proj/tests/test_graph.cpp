#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "prl/graph.hpp"

namespace prl {
namespace {

SmallGraph complete_graph(std::size_t n) {
  SmallGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<std::size_t>& perm) {
  SmallGraph h(g.size());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

TEST(SmallGraph, Basics) {
  SmallGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.complement().edge_count(), 4u);
  EXPECT_EQ(members(g.neighbors(1)), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(to_set({0, 2}), 0b101u);
  const auto h = g.induced({1, 2, 3});
  EXPECT_EQ(h.size(), 3u);
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(SmallGraph, FromSignMatrix) {
  const auto m = SignMatrix::from_rows({"-+-", "+-+", "-+-"});
  const auto plus = SmallGraph::from_sign_matrix(m, true);
  EXPECT_EQ(plus.edge_count(), 2u);
  EXPECT_TRUE(plus.adjacent(0, 1));
  const auto minus = SmallGraph::from_sign_matrix(m, false);
  EXPECT_EQ(minus.edge_count(), 1u);
  EXPECT_TRUE(minus.adjacent(0, 2));
}

TEST(Girth, SmallCases) {
  EXPECT_EQ(girth(cycle_graph(7)), 7u);
  EXPECT_EQ(girth(complete_graph(4)), 3u);
  EXPECT_EQ(girth(petersen_graph()), 5u);
  SmallGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_FALSE(girth(path).has_value());
}

TEST(MaximumClique, SmallCases) {
  EXPECT_EQ(std::popcount(maximum_clique(complete_graph(6))), 6);
  EXPECT_EQ(std::popcount(maximum_clique(cycle_graph(5))), 2);
  EXPECT_EQ(std::popcount(maximum_clique(petersen_graph())), 2);
  EXPECT_EQ(triangles(complete_graph(5)).size(), 10u);
  EXPECT_TRUE(triangles(petersen_graph()).empty());
}

TEST(Petersen, KneserConstruction) {
  const auto p = petersen_graph();
  EXPECT_EQ(p.size(), 10u);
  EXPECT_TRUE(is_regular(p, 3));
  EXPECT_EQ(p.edge_count(), 15u);
  const auto srg = strongly_regular_parameters(p);
  ASSERT_TRUE(srg.has_value());
  EXPECT_EQ(srg->k, 3u);
  EXPECT_EQ(srg->lambda, 0u);
  EXPECT_EQ(srg->mu, 1u);
}

TEST(Petersen, RecognisedUnderRelabelling) {
  std::vector<std::size_t> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto g = relabel(petersen_graph(), perm);
    const auto w = is_petersen(g);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_isomorphism(g, petersen_graph(), *w));
  }
}

TEST(Petersen, LookalikesRejected) {
  // Cubic graphs on ten vertices that are not Petersen.
  SmallGraph prism(10);  // pentagonal prism
  for (std::size_t i = 0; i < 5; ++i) {
    prism.add_edge(i, (i + 1) % 5);
    prism.add_edge(5 + i, 5 + (i + 1) % 5);
    prism.add_edge(i, 5 + i);
  }
  EXPECT_FALSE(is_petersen(prism).has_value());
  SmallGraph moebius(10);  // Moebius ladder on ten vertices
  for (std::size_t i = 0; i < 10; ++i) {
    moebius.add_edge(i, (i + 1) % 10);
    if (i < 5) moebius.add_edge(i, i + 5);
  }
  EXPECT_TRUE(is_regular(moebius, 3));
  EXPECT_FALSE(is_petersen(moebius).has_value());
  EXPECT_FALSE(is_petersen(cycle_graph(10)).has_value());
}

TEST(Isomorphism, CycleAndColours) {
  const auto c = cycle_graph(6);
  const auto w = find_isomorphism(c, relabel(c, {3, 5, 1, 0, 2, 4}));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_isomorphism(c, relabel(c, {3, 5, 1, 0, 2, 4}), *w));
  SmallGraph two_triangles(6);
  for (std::size_t b : {0u, 3u}) {
    two_triangles.add_edge(b, b + 1);
    two_triangles.add_edge(b + 1, b + 2);
    two_triangles.add_edge(b, b + 2);
  }
  EXPECT_FALSE(find_isomorphism(c, two_triangles).has_value());
  // Colours must be preserved.
  const std::vector<std::size_t> ca{0, 1, 0, 1, 0, 1}, cb{0, 0, 0, 1, 1, 1};
  EXPECT_TRUE(find_isomorphism(c, c, ca, ca).has_value());
  EXPECT_FALSE(find_isomorphism(c, c, ca, cb).has_value());
}

TEST(StronglyRegular, NotForIrregular) {
  SmallGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_FALSE(strongly_regular_parameters(path).has_value());
  EXPECT_FALSE(strongly_regular_parameters(cycle_graph(6)).has_value());
}

}  // namespace
}  // namespace prl
