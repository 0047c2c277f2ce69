#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "prl/quadrangle.hpp"
#include "test_support.hpp"

namespace prl {
namespace {

PointSet pts(std::initializer_list<std::size_t> one_based) {
  PointSet s = 0;
  for (auto c : one_based) s |= PointSet{1} << (c - 1);
  return s;
}

// Collinearity straight from the fixture: '-' off the diagonal.
SmallGraph fixture_collinearity() {
  const auto rows = test::relation_rows();
  SmallGraph g(15);
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = i + 1; j < 15; ++j)
      if (rows[i][j] == '-') g.add_edge(i, j);
  return g;
}

class FixtureQuadrangle : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { gq_ = build_gq_from_graph(fixture_collinearity()); }
  static inline IncidenceStructure gq_;
};

TEST_F(FixtureQuadrangle, LinesAndAxioms) {
  EXPECT_EQ(gq_.num_points, 15u);
  EXPECT_EQ(gq_.lines.size(), 15u);
  EXPECT_NE(std::find(gq_.lines.begin(), gq_.lines.end(), pts({1, 2, 7})), gq_.lines.end());
  EXPECT_TRUE(validate_gq_axioms(gq_).ok());
  const auto srg = strongly_regular_parameters(gq_.collinearity_graph());
  ASSERT_TRUE(srg.has_value());
  EXPECT_EQ(*srg, (SrgParameters{15, 6, 1, 3}));
  for (std::size_t p = 0; p < 15; ++p) EXPECT_EQ(gq_.lines_through(p).size(), 3u);
}

TEST(BuildQuadrangle, RejectsCompleteGraph) {
  SmallGraph k15(15);
  for (std::size_t u = 0; u < 15; ++u)
    for (std::size_t v = u + 1; v < 15; ++v) k15.add_edge(u, v);
  try {
    build_gq_from_graph(k15);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("triangles"), std::string::npos) << e.what();
  }
}

TEST(Axioms, GridIsNotOrderTwoTwo) {
  // 3x3 grid: GQ(2,1).
  IncidenceStructure grid{9, {pts({1, 2, 3}), pts({4, 5, 6}), pts({7, 8, 9}), pts({1, 4, 7}), pts({2, 5, 8}),
                              pts({3, 6, 9})}};
  EXPECT_TRUE(validate_gq_axioms(grid, 2, 1).ok());
  const auto r = validate_gq_axioms(grid, 2, 2);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations.front().find("lines"), std::string::npos);
}

TEST_F(FixtureQuadrangle, DeletedLineIsCaught) {
  auto broken = gq_;
  broken.lines.pop_back();
  EXPECT_FALSE(validate_gq_axioms(broken).ok());
}

TEST_F(FixtureQuadrangle, OvoidsMatchCliqueOracle) {
  // Oracle: 5-sets of pairwise distant points in the fixture.
  const auto rows = test::relation_rows();
  std::vector<PointSet> oracle;
  for (PointSet s = 0; s < (PointSet{1} << 15); ++s) {
    if (std::popcount(s) != 5) continue;
    const auto m = members(s);
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i)
      for (std::size_t j = i + 1; j < 5 && ok; ++j) ok = rows[m[i]][m[j]] == '+';
    if (ok) oracle.push_back(s);
  }
  std::vector<PointSet> found;
  for (const auto& o : enumerate_ovoids(gq_)) {
    EXPECT_EQ(o.kind, HyperplaneKind::Ovoid);
    EXPECT_TRUE(meets_every_line_once(gq_, o.points));
    found.push_back(o.points);
  }
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, oracle);
  EXPECT_EQ(found.size(), 6u);
  EXPECT_NE(std::find(found.begin(), found.end(), pts({1, 5, 9, 10, 14})), found.end());
}

TEST_F(FixtureQuadrangle, HyperplanesMatchBruteForce) {
  std::map<int, std::size_t> by_size;
  std::size_t total = 0;
  for (PointSet s = 1; s < gq_.all_points(); ++s) {
    const bool h = std::all_of(gq_.lines.begin(), gq_.lines.end(), [&](PointSet l) {
      const int k = std::popcount(l & s);
      return k == 1 || k == 3;
    });
    if (h) {
      ++total;
      ++by_size[std::popcount(s)];
    }
  }
  const auto hs = enumerate_hyperplanes(gq_);
  EXPECT_EQ(hs.size(), total);
  EXPECT_EQ(total, 31u);
  std::map<HyperplaneKind, std::size_t> by_kind;
  for (const auto& h : hs) ++by_kind[h.kind];
  EXPECT_EQ(by_kind[HyperplaneKind::Ovoid], by_size[5]);
  EXPECT_EQ(by_kind[HyperplaneKind::PerpSet], by_size[7]);
  EXPECT_EQ(by_kind[HyperplaneKind::Grid], by_size[9]);
  EXPECT_EQ(by_kind[HyperplaneKind::Ovoid], 6u);
  EXPECT_EQ(by_kind[HyperplaneKind::PerpSet], 15u);
  EXPECT_EQ(by_kind[HyperplaneKind::Grid], 10u);
}

TEST_F(FixtureQuadrangle, PerpOfC13) {
  const auto perp = gq_.collinear_with(12) | (PointSet{1} << 12);
  const auto h = classify_hyperplane(gq_, perp);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->kind, HyperplaneKind::PerpSet);
  EXPECT_EQ(h->center, 12u);
  EXPECT_EQ(std::popcount(perp), 7);
  EXPECT_FALSE(classify_hyperplane(gq_, pts({1, 2, 3})).has_value());
  EXPECT_FALSE(is_hyperplane(gq_, gq_.all_points()));
}

TEST_F(FixtureQuadrangle, GridClasses) {
  for (const auto& h : enumerate_hyperplanes(gq_)) {
    if (h.kind != HyperplaneKind::Grid) continue;
    const auto g = grid_classes(gq_, h.points);
    ASSERT_TRUE(g.has_value());
    PointSet rows = 0, cols = 0;
    for (auto r : g->rows) rows |= gq_.lines[r];
    for (auto c : g->cols) cols |= gq_.lines[c];
    EXPECT_EQ(rows, h.points);
    EXPECT_EQ(cols, h.points);
  }
}

TEST_F(FixtureQuadrangle, SpreadsMatchBruteForce) {
  std::size_t oracle = 0;
  for (std::uint32_t s = 0; s < (1u << 15); ++s) {
    if (std::popcount(s) != 5) continue;
    PointSet covered = 0;
    bool disjoint = true;
    for (auto l : members(s)) {
      disjoint = disjoint && (covered & gq_.lines[l]) == 0;
      covered |= gq_.lines[l];
    }
    if (disjoint) ++oracle;
  }
  const auto spreads = enumerate_spreads(gq_);
  EXPECT_EQ(spreads.size(), oracle);
  EXPECT_EQ(spreads.size(), 6u);
  // Spreads of the quadrangle are the ovoids of its dual.
  const auto d = dual(gq_);
  std::vector<PointSet> as_sets;
  for (const auto& sp : spreads) {
    EXPECT_EQ(sp.size(), 5u);
    as_sets.push_back(to_set(sp));
  }
  std::vector<PointSet> dual_ovoids;
  for (const auto& o : enumerate_ovoids(d)) dual_ovoids.push_back(o.points);
  std::sort(as_sets.begin(), as_sets.end());
  std::sort(dual_ovoids.begin(), dual_ovoids.end());
  EXPECT_EQ(as_sets, dual_ovoids);
}

TEST_F(FixtureQuadrangle, OvoidComplementIsPetersen) {
  for (const auto& o : enumerate_ovoids(gq_)) {
    const auto c = complement_graph_of_ovoid(gq_, o.points);
    EXPECT_EQ(c.vertices.size(), 10u);
    EXPECT_TRUE(is_petersen(c.graph).has_value()) << std::hex << o.points;
  }
}

TEST_F(FixtureQuadrangle, SelfDual) {
  const auto d = dual(gq_);
  EXPECT_TRUE(validate_gq_axioms(d).ok());
  const auto iso = find_structure_isomorphism(gq_, d);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_structure_isomorphism(gq_, d, *iso));
  const auto dd = dual(d);
  auto a = gq_.lines, b = dd.lines;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST_F(FixtureQuadrangle, SpreadRemovalGivesPetersen) {
  const auto d = dual(gq_);
  for (const auto& sp : enumerate_spreads(gq_)) {
    const auto r = spread_removal_dual(gq_, sp);
    EXPECT_EQ(r.num_points, 10u);
    EXPECT_EQ(r.lines.size(), 15u);
    for (std::size_t p = 0; p < r.num_points; ++p) EXPECT_EQ(r.lines_through(p).size(), 3u);
    for (auto l : r.lines) EXPECT_EQ(std::popcount(l), 2);
    const auto g = r.collinearity_graph();
    EXPECT_TRUE(is_petersen(g).has_value());
    const auto c = complement_graph_of_ovoid(d, to_set(sp));
    EXPECT_TRUE(find_isomorphism(g, c.graph).has_value());
  }
}

TEST(StructureIsomorphism, DetectsDifference) {
  IncidenceStructure a{4, {pts({1, 2}), pts({2, 3}), pts({3, 4})}};
  IncidenceStructure b{4, {pts({1, 2}), pts({1, 3}), pts({1, 4})}};
  EXPECT_FALSE(find_structure_isomorphism(a, b).has_value());
  IncidenceStructure c{4, {pts({3, 4}), pts({4, 1}), pts({1, 2})}};
  const auto iso = find_structure_isomorphism(a, c);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_structure_isomorphism(a, c, *iso));
}

}  // namespace
}  // namespace prl
