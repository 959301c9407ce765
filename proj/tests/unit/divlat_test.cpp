#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "gen.hpp"
#include "lgdual/rational.hpp"

namespace lgdual {
namespace {

std::vector<DivNat> nats(std::initializer_list<unsigned long> v) {
  return std::vector<DivNat>(v.begin(), v.end());
}

TEST(Rat, StoresReducedWithPositiveDenominator) {
  Rat r{Int(6), Int(-8)};
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rat(4).str(), "4");
  EXPECT_THROW(Rat(Int(1), Int(0)), InputError);
}

TEST(Rat, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rat::parse("2/4"), Rat(Int(1), Int(2)));
  EXPECT_EQ(Rat::parse("-5"), Rat(-5));
  EXPECT_EQ(Rat::parse("-10/12").str(), "-5/6");
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "--1", " 1"})
    EXPECT_THROW(Rat::parse(bad), InputError) << bad;
}

TEST(Rat, FloorAndCeil) {
  EXPECT_EQ(Rat::parse("7/2").floor(), 3);
  EXPECT_EQ(Rat::parse("7/2").ceil(), 4);
  EXPECT_EQ(Rat::parse("-7/2").floor(), -4);
  EXPECT_EQ(Rat::parse("-7/2").ceil(), -3);
  EXPECT_EQ(Rat(3).floor(), 3);
}

TEST(Divides, ExtendedOrder) {
  EXPECT_TRUE(divides(3, 6));
  EXPECT_TRUE(divides(5, 0));
  EXPECT_FALSE(divides(0, 4));
  EXPECT_TRUE(divides(0, 0));
  EXPECT_FALSE(divides(4, 6));
}

TEST(LcmDiv, Examples) {
  EXPECT_EQ(lcm_div(nats({2, 3})), DivNat(6));
  EXPECT_EQ(lcm_div(nats({2, 0})), DivNat(0));
  EXPECT_EQ(lcm_div(nats({})), DivNat(1));
}

TEST(LcmDiv, AgreesWithNaiveLcmUpTo60) {
  for (unsigned long a = 1; a <= 60; ++a) {
    for (unsigned long b = 1; b <= 60; ++b) {
      unsigned long naive = a;
      while (naive % b != 0) naive += a;
      ASSERT_EQ(lcm_div(a, b), DivNat(naive)) << a << " " << b;
    }
  }
}

TEST(LcmDiv, IsTheDivisibilityJoin) {
  for (unsigned long a = 0; a <= 24; ++a) {
    for (unsigned long b = 0; b <= 24; ++b) {
      DivNat j = lcm_div(a, b);
      ASSERT_TRUE(divides(a, j) && divides(b, j));
      // Least: divides every common upper bound in 0..600.
      for (unsigned long c = 0; c <= 600; ++c)
        if (divides(a, c) && divides(b, c)) ASSERT_TRUE(divides(j, c)) << a << " " << b << " " << c;
      ASSERT_EQ(lcm_div(a, b), lcm_div(b, a));
      ASSERT_EQ(lcm_div(a, a), DivNat(a));
      ASSERT_EQ(lcm_div(a, 1), DivNat(a));
      ASSERT_EQ(lcm_div(a, 0), DivNat(0));
      for (unsigned long c = 0; c <= 12; ++c)
        ASSERT_EQ(lcm_div(lcm_div(a, b), DivNat(c)), lcm_div(DivNat(a), lcm_div(b, c)));
    }
  }
}

TEST(Divides, IsAPartialOrder) {
  for (unsigned long a = 0; a <= 30; ++a) {
    ASSERT_TRUE(divides(a, a));
    for (unsigned long b = 0; b <= 30; ++b) {
      if (divides(a, b) && divides(b, a)) ASSERT_EQ(a, b);
      for (unsigned long c = 0; c <= 30; ++c)
        if (divides(a, b) && divides(b, c)) ASSERT_TRUE(divides(a, c));
    }
  }
}

TEST(GcdDiv, IsTheMeet) {
  for (unsigned long a = 0; a <= 30; ++a) {
    for (unsigned long b = 0; b <= 30; ++b) {
      DivNat m = gcd_div(a, b);
      ASSERT_TRUE(divides(m, a) && divides(m, b));
      for (unsigned long c = 1; c <= 30; ++c)
        if (divides(c, a) && divides(c, b)) ASSERT_TRUE(divides(c, m));
    }
  }
}

TEST(Den, RationalsAndVectors) {
  EXPECT_EQ(den_rat(Rat::parse("3/4")), DivNat(4));
  EXPECT_EQ(den_rat(Rat(2)), DivNat(1));
  EXPECT_EQ(den_rat(Rat::parse("-5/6")), DivNat(6));
  std::vector<Rat> p{Rat::parse("1/2"), Rat::parse("1/3")};
  EXPECT_EQ(den_vec(p), DivNat(6));
  EXPECT_EQ(den_vec(std::vector<Rat>{}), DivNat(1));
  std::vector<Rat> q{Rat::parse("1/2"), Rat::parse("1/4")};
  EXPECT_EQ(den_vec(q), DivNat(4));
}

TEST(Den, VectorConcatenationIsLcm) {
  testgen::Gen gen(testgen::global_seed());
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rat> p, q;
    for (long i = gen.uniform(0, 4); i > 0; --i) p.push_back(gen.rat(Rat(-3), Rat(3), 20));
    for (long i = gen.uniform(0, 4); i > 0; --i) q.push_back(gen.rat(Rat(-3), Rat(3), 20));
    std::vector<Rat> pq = p;
    pq.insert(pq.end(), q.begin(), q.end());
    ASSERT_EQ(den_vec(pq), lcm_div(den_vec(p), den_vec(q)));
  }
}

TEST(DivSet, Examples) {
  DivSet six = div_set(nats({6}));
  ASSERT_FALSE(six.is_everything());
  EXPECT_EQ(six.members(), nats({1, 2, 3, 6}));
  EXPECT_TRUE(div_set(nats({0})).is_everything());
  EXPECT_EQ(div_set(nats({4, 6})).members(), nats({1, 2, 3, 4, 6}));
  EXPECT_TRUE(div_set(nats({})).members().empty());
}

TEST(DivSet, MatchesBruteForceAndIsDownwardClosed) {
  testgen::Gen gen(testgen::global_seed());
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<DivNat> j;
    for (long i = gen.uniform(0, 3); i > 0; --i) j.push_back(DivNat(static_cast<unsigned long>(gen.uniform(1, 60))));
    DivSet s = div_set(j);
    for (unsigned long n = 1; n <= 60; ++n) {
      bool brute = std::any_of(j.begin(), j.end(), [&](const DivNat& m) { return m.to_ulong() % n == 0; });
      ASSERT_EQ(s.contains(n), brute) << n;
      if (s.contains(n))
        for (unsigned long d = 1; d <= n; ++d)
          if (n % d == 0) ASSERT_TRUE(s.contains(d));
    }
  }
}

TEST(Divisors, Ascending) {
  std::vector<Int> expected{1, 2, 3, 4, 6, 12};
  EXPECT_EQ(divisors(Int(12)), expected);
}

// Minimal denominator first, then minimal |numerator|.
Rat simplest_oracle(const Rat& lo, const Rat& hi) {
  for (long q = 1;; ++q) {
    std::optional<Rat> best;
    long start = (lo * Rat(q)).floor().get_si();
    long stop = (hi * Rat(q)).ceil().get_si();
    for (long p = start; p <= stop; ++p) {
      Rat v{Int(p), Int(q)};
      if (lo < v && v < hi && (!best || abs(v) < abs(*best))) best = v;
    }
    if (best) return *best;
  }
}

TEST(SternBrocot, SimplestBetweenMatchesOracle) {
  testgen::Gen gen(testgen::global_seed());
  for (int trial = 0; trial < 2000; ++trial) {
    Rat a = gen.rat(Rat(-4), Rat(4), 30);
    Rat b = gen.rat(Rat(-4), Rat(4), 30);
    if (a == b) continue;
    Rat lo = min(a, b), hi = max(a, b);
    ASSERT_EQ(simplest_between(lo, hi), simplest_oracle(lo, hi)) << lo << " " << hi;
  }
  EXPECT_EQ(simplest_between(Rat(-1), Rat(1)), Rat(0));
  EXPECT_EQ(simplest_between(Rat::parse("1/3"), Rat::parse("1/2")), Rat::parse("2/5"));
}

TEST(SternBrocot, SequenceIsDistinctInsideAndStartsWithSimplest) {
  Rat lo(0), hi(1);
  auto seq = stern_brocot_sequence(lo, hi, 7);
  std::vector<std::string> got;
  for (const auto& r : seq) got.push_back(r.str());
  EXPECT_EQ(got, (std::vector<std::string>{"1/2", "1/3", "2/3", "1/4", "2/5", "3/5", "3/4"}));

  testgen::Gen gen(testgen::global_seed());
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = gen.rat(Rat(-3), Rat(3), 12);
    Rat b = gen.rat(Rat(-3), Rat(3), 12);
    if (a == b) continue;
    Rat l = min(a, b), h = max(a, b);
    auto s = stern_brocot_sequence(l, h, 20);
    ASSERT_EQ(s.size(), 20u);
    ASSERT_EQ(s.front(), simplest_between(l, h));
    std::set<Rat> seen(s.begin(), s.end());
    ASSERT_EQ(seen.size(), s.size());
    for (const auto& r : s) ASSERT_TRUE(l < r && r < h);
  }
}

}  // namespace
}  // namespace lgdual
