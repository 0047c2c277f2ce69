#include <gtest/gtest.h>

#include "prl/ring.hpp"
#include "prl/serialize.hpp"
#include "test_support.hpp"

namespace prl {
namespace {

std::vector<std::uint32_t> indices(const std::vector<RingElement>& v) {
  std::vector<std::uint32_t> out;
  for (auto e : v) out.push_back(e.index);
  return out;
}

TEST(BitMatrix, RankAndProducts) {
  EXPECT_EQ(BitMatrix::identity(4).rank(), 4u);
  BitMatrix m(3);
  m.set_row(0, 0b011);
  m.set_row(1, 0b110);
  m.set_row(2, 0b101);  // sum of the first two
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_FALSE(m.invertible());
  EXPECT_EQ(m * BitMatrix::identity(3), m);
  EXPECT_EQ(m + m, BitMatrix(3));
  EXPECT_THROW(BitMatrix(33), std::invalid_argument);
}

TEST(RingM2F2, TablesMatchReferenceFixture) {
  const auto r = build_m2f2();
  const auto fixture = test::m2f2_tables();
  ASSERT_EQ(r.order, 16u);
  for (std::size_t x = 0; x < 16; ++x) {
    for (std::size_t y = 0; y < 16; ++y) {
      EXPECT_EQ(r.add(r.element(x), r.element(y)).index, fixture["add_table"][x][y].get<std::uint32_t>())
          << "add(" << x << "," << y << ")";
      EXPECT_EQ(r.mul(r.element(x), r.element(y)).index, fixture["mul_table"][x][y].get<std::uint32_t>())
          << "mul(" << x << "," << y << ")";
    }
  }
  EXPECT_EQ(ring_to_json(r)["rep"], fixture["rep"]);
}

TEST(RingM2F2, SpotValues) {
  const auto r = build_m2f2();
  auto e = [&](int i) { return r.element(static_cast<std::size_t>(i)); };
  EXPECT_EQ(r.add(e(2), e(3)).index, 1u);
  EXPECT_EQ(r.mul(e(5), e(4)).index, 0u);
  EXPECT_EQ(r.mul(e(9), e(9)).index, 1u);
  for (auto x : r.elements()) EXPECT_EQ(r.add(x, x), r.zero);
  EXPECT_EQ(r.one.index, 1u);
  EXPECT_EQ(r.zero.index, 0u);
}

TEST(RingM2F2, UnitsAndZeroDivisors) {
  const auto r = build_m2f2();
  EXPECT_EQ(indices(units(r)), (std::vector<std::uint32_t>{1, 2, 9, 11, 12, 13}));
  EXPECT_EQ(zero_divisors(r).size(), 10u);
  EXPECT_EQ(zero_divisors(r).front(), r.zero);
  EXPECT_FALSE(is_commutative(r));
}

TEST(SmallRings, OrdersUnitsAndRelations) {
  const auto rings = build_small_rings();
  EXPECT_EQ(rings.gf2.order, 2u);
  EXPECT_EQ(indices(units(rings.gf2)), std::vector<std::uint32_t>{1});
  EXPECT_EQ(units(rings.gf4).size(), 3u);
  EXPECT_EQ(units(rings.gf2xgf2).size(), 1u);
  EXPECT_EQ(units(rings.dual_numbers).size(), 2u);

  const auto& f4 = rings.gf4;
  const auto w = f4.element(2);
  EXPECT_EQ(f4.mul(w, w), f4.add(w, f4.one));
  EXPECT_EQ(f4.mul(f4.mul(w, w), w), f4.one);

  const auto& p = rings.gf2xgf2;
  EXPECT_EQ(p.mul(p.element(2), p.element(3)), p.zero);  // (1,0)(0,1)

  const auto& d = rings.dual_numbers;
  EXPECT_EQ(d.mul(d.element(2), d.element(2)), d.zero);  // x^2 = 0

  for (const RingSpec* r : {&rings.gf2, &rings.gf4, &rings.gf2xgf2, &rings.dual_numbers}) {
    EXPECT_TRUE(is_commutative(*r)) << r->name;
    for (auto x : r->elements()) EXPECT_EQ(r->add(x, x), r->zero) << r->name;
  }
}

TEST(ValidateRing, AllBuiltRingsAreValid) {
  for (const auto& name : ring_names()) {
    const auto report = validate_ring(ring_by_name(name));
    EXPECT_TRUE(report.ok()) << name << ": " << report.violations.size() << " violations";
  }
}

TEST(ValidateRing, CorruptedMultiplicationCellIsNamed) {
  auto r = build_m2f2();
  r.mul_table[3 * 16 + 4] = RingElement{5};
  const auto report = validate_ring(r);
  ASSERT_FALSE(report.ok());
  bool named = false;
  for (const auto& v : report.violations) {
    named = named || (v.law == "representation multiplicative" && v.elements == std::vector<std::uint32_t>{3, 4});
  }
  EXPECT_TRUE(named);
}

TEST(ValidateRing, FixtureRoundTripsAndValidates) {
  const auto r = ring_from_json(test::m2f2_tables());
  EXPECT_TRUE(validate_ring(r).ok());
  EXPECT_EQ(ring_to_json(r)["mul_table"], ring_to_json(build_m2f2())["mul_table"]);
}

TEST(ValidateRing, OutOfRangeEntryIsReportedNotThrown) {
  auto r = build_gf4();
  r.add_table[0] = RingElement{9};
  const auto report = validate_ring(r);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().law, "closure");
}

// Unit <=> full-rank representation, for every element of every ring.
TEST(RingProperties, UnitIffRepresentationInvertible) {
  for (const auto& name : ring_names()) {
    const auto r = ring_by_name(name);
    const auto u = units(r);
    for (auto x : r.elements()) {
      const bool is_unit = std::find(u.begin(), u.end(), x) != u.end();
      EXPECT_EQ(is_unit, is_unit_by_rank(r, x)) << name << " element " << x.index;
    }
  }
}

TEST(RingFromMatrices, RejectsNonClosedSets) {
  EXPECT_THROW(ring_from_matrices("bad", {detail::mat2(0, 0, 0, 0), detail::mat2(1, 0, 0, 1), detail::mat2(0, 1, 0, 0)}),
               std::invalid_argument);
  EXPECT_THROW(ring_by_name("gf8"), std::invalid_argument);
}

}  // namespace
}  // namespace prl
