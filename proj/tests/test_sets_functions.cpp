#include <gtest/gtest.h>

#include <random>

#include "acfc/catalog.hpp"
#include "acfc/errors.hpp"
#include "acfc/sets_functions.hpp"
#include "oracles.hpp"

using namespace acfc;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Rational> out;
  for (auto [p, q] : xs) out.emplace_back(p, q);
  return out;
}

BVFunction randomFunction(const CompactRealSet& set, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Scalar> v(set.size());
  for (auto& x : v) x = Scalar(g(rng), g(rng));
  return BVFunction(set, v);
}

}  // namespace

TEST(CompactRealSet, Sigma0Examples) {
  const auto s4 = CompactRealSet::sigma0(4);
  EXPECT_EQ(s4.points(), rationals({{-1, 1}, {-1, 3}, {0, 1}, {1, 4}, {1, 2}}));
  EXPECT_EQ(s4.limitMarkers(), rationals({{0, 1}}));
  EXPECT_EQ(CompactRealSet::sigma0(1).points(), rationals({{-1, 1}, {0, 1}}));
  EXPECT_EQ(CompactRealSet::sigma0(6).points(),
            rationals({{-1, 1}, {-1, 3}, {-1, 5}, {0, 1}, {1, 6}, {1, 4}, {1, 2}}));
  EXPECT_EQ(s4.familyDescriptor(), "sigma0-truncation(4)");
}

TEST(CompactRealSet, Sigma0MatchesEnumerationOracle) {
  for (std::size_t n : {1, 2, 3, 7, 20, 101}) {
    const auto set = CompactRealSet::sigma0(n);
    EXPECT_EQ(set.pointsAsDouble(), oracle::sigma0Points(n));
    const auto pts = oracle::sigma0Points(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const double t = (k % 2 ? -1.0 : 1.0) / static_cast<double>(k);
      EXPECT_EQ(sigma0Index(n, k), oracle::position(pts, t)) << "n=" << n << " k=" << k;
    }
    EXPECT_EQ(sigma0ZeroIndex(n), oracle::position(pts, 0.0));
  }
}

TEST(CompactRealSet, GridAndGenericSets) {
  const auto grid = CompactRealSet::intervalGrid(Rational(0), Rational(1), 3);
  EXPECT_EQ(grid.points(), rationals({{0, 1}, {1, 2}, {1, 1}}));
  EXPECT_EQ(grid.familyDescriptor(), "interval-grid(0,1,3)");
  const auto generic = CompactRealSet::fromPoints(rationals({{1, 2}, {-1, 1}}));
  EXPECT_EQ(generic.points(), rationals({{-1, 1}, {1, 2}}));
  EXPECT_THROW(CompactRealSet::fromPoints(rationals({{1, 2}, {2, 4}})), InvalidArgument);
  EXPECT_THROW(CompactRealSet::fromPoints({}), InvalidArgument);
  EXPECT_TRUE(generic.contains(Rational(1, 2)));
  EXPECT_FALSE(generic.contains(Rational(0)));
}

TEST(BVFunction, RestrictionExamples) {
  const auto set = CompactRealSet::sigma0(4);
  const auto id = restrict(parseRule("id"), set);
  const std::vector<Scalar> idValues{-1.0, -1.0 / 3, 0.0, 0.25, 0.5};
  EXPECT_EQ(id.values(), idValues);
  const auto chiL = restrict(parseRule("chi_leq_0"), set);
  const std::vector<Scalar> chiValues{1.0, 1.0, 1.0, 0.0, 0.0};
  EXPECT_EQ(chiL.values(), chiValues);
  const auto zero = restrict(parseRule("zero"), set);
  for (const auto& v : zero.values()) EXPECT_EQ(v, Scalar(0));
}

TEST(BVFunction, NormExamples) {
  const auto set = CompactRealSet::sigma0(4);
  EXPECT_EQ(variation(restrict(parseRule("one"), set)), 0.0);
  EXPECT_EQ(bvNorm(restrict(parseRule("one"), set)), 1.0);
  EXPECT_DOUBLE_EQ(variation(restrict(parseRule("id"), set)), 1.5);
  EXPECT_DOUBLE_EQ(bvNorm(restrict(parseRule("id"), set)), 2.5);
  EXPECT_EQ(variation(restrict(parseRule("chi_leq_0"), set)), 1.0);
  EXPECT_EQ(bvNorm(restrict(parseRule("chi_leq_0"), set)), 2.0);
}

TEST(BVFunction, AlgebraIdentities) {
  for (std::size_t n : {4, 9, 30}) {
    const auto set = CompactRealSet::sigma0(n);
    const auto l = restrict(parseRule("chi_leq_0"), set);
    const auto r = restrict(parseRule("chi_gt_0"), set);
    const auto product = mul(l, r);
    const auto sum = add(l, r);
    for (const auto& v : product.values()) EXPECT_EQ(v, Scalar(0));
    for (const auto& v : sum.values()) EXPECT_EQ(v, Scalar(1));
    const auto f = restrict(parseRule("poly:3,0,-2,1"), set);
    EXPECT_EQ(add(f, restrict(parseRule("zero"), set)).values(), f.values());
    EXPECT_EQ(mul(f, restrict(parseRule("one"), set)).values(), f.values());
    EXPECT_EQ(scale(2.0, f).values(), add(f, f).values());
  }
  EXPECT_THROW(add(restrict(parseRule("one"), CompactRealSet::sigma0(3)),
                   restrict(parseRule("one"), CompactRealSet::sigma0(4))),
               SetMismatch);
}

TEST(BVFunction, VariationMatchesBruteForcePartitionOracle) {
  // Integer-valued real functions keep every partial sum exact, so the
  // comparison is exact.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> value(-9, 9);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto set = CompactRealSet::sigma0(n);  // n + 1 <= 10 points
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Scalar> v(set.size());
      for (auto& x : v) x = Scalar(value(rng));
      EXPECT_EQ(variation(BVFunction(set, v)), oracle::bruteForceVariation(v));
    }
  }
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto set = CompactRealSet::sigma0(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = randomFunction(set, rng);
      EXPECT_NEAR(variation(f), oracle::bruteForceVariation(f.values()), 1e-12);
    }
  }
}

TEST(BVFunction, SubadditivityAndSubmultiplicativityOverCatalog) {
  const auto catalog = standardCatalog();
  for (std::size_t n : {4, 10, 100}) {
    const auto set = CompactRealSet::sigma0(n);
    for (const auto& f : catalog) {
      const auto bf = restrict(f, set);
      for (const auto& g : catalog) {
        const auto bg = restrict(g, set);
        EXPECT_LE(variation(add(bf, bg)), variation(bf) + variation(bg) + 1e-12) << f.id() << " " << g.id();
        EXPECT_LE(bvNorm(mul(bf, bg)), bvNorm(bf) * bvNorm(bg) + 1e-12) << f.id() << " " << g.id();
      }
    }
  }
}

TEST(BVFunction, MonotoneRuleVariationIsRange) {
  for (const char* id : {"id", "poly:1,0,0,0", "chi_leq_0", "chi_gt_-1/3"}) {
    const auto rule = parseRule(id);
    const auto set = CompactRealSet::sigma0(25);
    const auto f = restrict(rule, set);
    EXPECT_NEAR(variation(f), std::abs(f.values().back() - f.values().front()), 1e-15) << id;
  }
}

TEST(BVFunction, RestrictionToSubsetDoesNotIncreaseVariation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rule = randomRule(rng());
    const auto big = CompactRealSet::sigma0(20);
    const auto small = CompactRealSet::sigma0(1 + trial % 19);
    EXPECT_LE(variation(restrict(rule, small)), variation(restrict(rule, big)) + 1e-12) << rule.id();
  }
}

TEST(Continuity, LimitReportExamples) {
  const auto poly = isContinuousAtLimit(parseRule("poly:1,0"), 1000, 5, 1e-2);
  EXPECT_TRUE(poly.continuous);
  const auto chi = isContinuousAtLimit(parseRule("chi_leq_0"), 100, 5, 0.5);
  EXPECT_FALSE(chi.continuous);
  EXPECT_EQ(chi.defect, 1.0);
  EXPECT_GT(chi.worstPoint, Rational(0));
  const auto away = isContinuousAtLimit(parseRule("chi_point_-1"), 50, 5, 1e-12);
  EXPECT_TRUE(away.continuous);
  EXPECT_EQ(away.defect, 0.0);
  EXPECT_THROW(isContinuousAtLimit(parseRule("id"), 4, 4, 1e-9), InvalidArgument);
}

TEST(Continuity, ExactMarkerCheck) {
  const auto set = CompactRealSet::sigma0(10);
  EXPECT_TRUE(isContinuousAtMarkers(parseRule("poly:3,0,-2,1"), set));
  EXPECT_TRUE(isContinuousAtMarkers(parseRule("chi_point_-1"), set));
  EXPECT_FALSE(isContinuousAtMarkers(parseRule("chi_point_0"), set));
  EXPECT_FALSE(isContinuousAtMarkers(parseRule("chi_leq_0"), set));
  EXPECT_TRUE(isContinuousAtMarkers(parseRule("id") * parseRule("chi_gt_0"), set));
}
