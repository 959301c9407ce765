#include <gtest/gtest.h>

#include "gen.hpp"
#include "lgdual/adc.hpp"

namespace lgdual {
namespace {

Rat R(const char* s) { return Rat::parse(s); }

// Some p/m with m | n lies in the region (n >= 1); 0 admits any nonempty region.
bool brute_admits(const RatRegion& region, unsigned long n) {
  if (n == 0) return !region.empty();
  for (unsigned long m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    for (const auto& c : region.components()) {
      if (const auto* p = std::get_if<Rat>(&c)) {
        if (divides(den_rat(*p), m)) return true;
      } else {
        const auto& iv = std::get<RatInterval>(c);
        if (testgen::grid_hits(iv.lo, iv.hi, static_cast<long>(m))) return true;
      }
    }
  }
  return false;
}

TEST(Adc, PointIsMultiplesOfItsDenominator) {
  AdcSet s = adc(RatRegion::point(R("1/2")));
  for (unsigned long n : {0UL, 2UL, 4UL, 6UL}) EXPECT_TRUE(adc_contains(s, n)) << n;
  for (unsigned long n : {1UL, 3UL, 5UL}) EXPECT_FALSE(adc_contains(s, n)) << n;
}

TEST(Adc, IntervalThirdToHalfMissesOnlyOne) {
  AdcSet s = adc(RatRegion::interval(R("1/3"), R("1/2")));
  ASSERT_TRUE(s.is_cofinite());
  EXPECT_EQ(s.exclusions(), std::vector<Int>{1});
  EXPECT_TRUE(s.contains_zero());
  EXPECT_FALSE(adc_contains(s, 1));
  for (unsigned long n = 2; n <= 12; ++n) EXPECT_TRUE(adc_contains(s, n)) << n;
}

TEST(Adc, EmptyRegionIsEmpty) {
  AdcSet s = adc(RatRegion());
  for (unsigned long n = 0; n <= 20; ++n) EXPECT_FALSE(adc_contains(s, n));
}

TEST(Adc, UnionOfPoints) {
  RatRegion r;
  r.add_point(R("2/3")).add_point(R("1/2"));
  AdcSet s = adc(r);
  EXPECT_TRUE(adc_contains(s, 3));
  EXPECT_TRUE(adc_contains(s, 2));
  EXPECT_FALSE(adc_contains(s, 5));
  EXPECT_EQ(s.upsets(), (std::vector<DivNat>{2, 3}));
}

TEST(Adc, DegenerateIntervalBecomesPoint) {
  RatRegion r;
  r.add_interval(R("1/2"), R("1/2"));
  EXPECT_EQ(r, RatRegion::point(R("1/2")));
  EXPECT_THROW(RatRegion().add_interval(R("1"), R("0")), InputError);
}

TEST(Adc, CofiniteAbsorbsUpsets) {
  RatRegion r;
  r.add_point(R("1/5")).add_interval(R("1/3"), R("1/2"));
  AdcSet s = adc(r);
  EXPECT_TRUE(s.is_cofinite());
  EXPECT_TRUE(s.upsets().empty());
  EXPECT_FALSE(adc_contains(s, 1));
}

TEST(Adc, MatchesBruteForceOnRandomRegions) {
  testgen::Gen gen(testgen::global_seed());
  for (int trial = 0; trial < 500; ++trial) {
    RatRegion r = gen.region(3, 8);
    AdcSet s = adc(r);
    for (unsigned long n = 0; n <= 60; ++n) {
      ASSERT_EQ(adc_contains(s, n), brute_admits(r, n)) << "n=" << n;
      ASSERT_EQ(region_admits(r, n), brute_admits(r, n));
    }
  }
}

TEST(Adc, IntervalsAreCofiniteBeyondReciprocalWidth) {
  testgen::Gen gen(testgen::global_seed());
  for (int trial = 0; trial < 500; ++trial) {
    RatInterval iv = gen.interval(Rat(-2), Rat(2), 12);
    if (iv.lo == iv.hi) continue;
    AdcSet s = adc(RatRegion::interval(iv.lo, iv.hi));
    Int k = (Rat(1) / (iv.hi - iv.lo)).ceil();
    for (Int n = k; n <= k + 50; ++n) ASSERT_TRUE(adc_contains(s, DivNat(n)));
  }
}

TEST(Adc, EquivalenceUsesComparisonBound) {
  AdcSet a = adc(RatRegion::interval(R("0"), R("1")));
  AdcSet b = adc(RatRegion::point(R("0")));
  EXPECT_TRUE(adc_equivalent(a, b));
  EXPECT_FALSE(adc_equivalent(adc(RatRegion::point(R("1/2"))), adc(RatRegion::point(R("1/4")))));
  EXPECT_TRUE(adc_equivalent(AdcSet::multiples_of(2).unite(AdcSet::multiples_of(4)),
                             AdcSet::multiples_of(2)));
}

TEST(AdcIntersect, Examples) {
  std::vector<RatInterval> nested{{R("0"), R("1")}, {R("1/3"), R("1/2")}};
  EXPECT_TRUE(adc_equivalent(adc_intersect_intervals(nested),
                             adc(RatRegion::interval(R("1/3"), R("1/2")))));
  std::vector<RatInterval> touching{{R("0"), R("1/2")}, {R("1/2"), R("1")}};
  EXPECT_TRUE(adc_equivalent(adc_intersect_intervals(touching), AdcSet::multiples_of(2)));
  std::vector<RatInterval> apart{{R("0"), R("1/3")}, {R("1/2"), R("1")}};
  EXPECT_THROW(adc_intersect_intervals(apart), PreconditionError);
  EXPECT_THROW(adc_intersect_intervals(std::vector<RatInterval>{}), PreconditionError);
}

TEST(AdcIntersect, LowerDirectedPredicate) {
  std::vector<RatInterval> chain{{R("0"), R("1")}, {R("1/4"), R("3/4")}, {R("1/3"), R("1/2")}};
  EXPECT_TRUE(is_lower_directed(chain));
  std::vector<RatInterval> touching{{R("0"), R("1/2")}, {R("1/2"), R("1")}};
  EXPECT_FALSE(is_lower_directed(touching));
}

TEST(Ac, Examples) {
  FinASpace x({{"a", 2}, {"b", 3}, {"c", 0}});
  EXPECT_EQ(x.labels_of(ac(x, RatRegion::point(R("1/2")))), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(x.labels_of(ac(x, RatRegion::interval(R("0"), R("1")))),
            (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(ac(x, RatRegion()).empty());
}

}  // namespace
}  // namespace lgdual
