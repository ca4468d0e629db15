#include <gtest/gtest.h>

#include <random>

#include "acfc/catalog.hpp"
#include "acfc/errors.hpp"
#include "acfc/functional_calculus.hpp"
#include "acfc/lp_extrapolation.hpp"
#include "oracles.hpp"

using namespace acfc;

namespace {

std::vector<FunctionRule> phiCatalog() {
  std::vector<FunctionRule> c{parseRule("chi_point_0"), parseRule("chi:(0,1]")};
  for (const auto& f : monomialCatalog(4)) c.push_back(f);
  return c;
}

}  // namespace

TEST(DiagonalCalculus, Examples) {
  const auto set = CompactRealSet::sigma0(4);
  const auto c = diagonalCalculus(set);
  EXPECT_EQ(c.matrix(parseRule("one")), Matrix::Identity(5, 5));
  EXPECT_EQ(c.generator().matrix, multiplicationOperator(set).matrix);
  Vector d(5);
  d << 1, 1, 1, 0, 0;
  const auto chi = c.evaluate(parseRule("chi_leq_0"));
  EXPECT_EQ(chi.matrix, Matrix(d.asDiagonal()));
  EXPECT_EQ(operatorNorm(chi).value, 1.0);
}

TEST(DiagonalCalculus, NormEqualsSupNormExactly) {
  for (std::size_t n : {4, 10, 100}) {
    const auto set = CompactRealSet::sigma0(n);
    const auto c = diagonalCalculus(set);
    for (const auto& f : standardCatalog()) {
      const auto norm = operatorNorm(c.evaluate(f));
      EXPECT_TRUE(norm.exact);
      EXPECT_EQ(norm.value, supNorm(restrict(f, set))) << f.id();
    }
  }
}

TEST(DiagonalCalculus, ApplyAgreesWithMatrix) {
  std::mt19937_64 rng(2);
  const auto c = diagonalCalculus(CompactRealSet::sigma0(12));
  for (const auto& f : standardCatalog()) {
    const Vector x = oracle::randomVector(13, rng);
    EXPECT_LE((c.apply(f, x) - c.matrix(f) * x).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(ConjugatedCalculus, ClosedFormOnC0Coordinates) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {4, 9, 40}) {
    const auto set = CompactRealSet::sigma0(n);
    const auto [u, uInv] = uIsoC0(n);
    const auto c = conjugatedCalculus(diagonalCalculus(set), u, uInv);
    EXPECT_LE((c.matrix(parseRule("one")) - Matrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff(), 1e-15);
    for (const auto& f : standardCatalog()) {
      const Vector x = oracle::randomVector(static_cast<Eigen::Index>(n + 1), rng);
      const Vector y = c.apply(f, x);
      const Scalar f0 = f(Rational(0));
      EXPECT_NEAR(std::abs(y[0] - f0 * x[0]), 0.0, 1e-12);
      for (std::size_t k = 1; k <= n; ++k) {
        const Scalar fk = f(Rational(k % 2 ? -1 : 1, static_cast<std::int64_t>(k)));
        const auto i = static_cast<Eigen::Index>(k);
        EXPECT_NEAR(std::abs(y[i] - ((fk - f0) * x[0] + fk * x[i])), 0.0, 1e-12) << f.id() << " k=" << k;
      }
    }
  }
}

TEST(ConjugatedCalculus, IndicatorOfLeftHalfOnE0) {
  const std::size_t n = 10;
  const auto [u, uInv] = uIsoC0(n);
  const auto c = conjugatedCalculus(diagonalCalculus(CompactRealSet::sigma0(n)), u, uInv);
  const Vector y = c.apply(parseRule("chi_leq_0"), Vector::Unit(n + 1, 0));
  EXPECT_EQ(y[0], Scalar(1));
  for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(y[static_cast<Eigen::Index>(k)], Scalar(k % 2 ? 0 : -1));
  // Explicit matrix product as a cross-check.
  const Matrix direct = uInv.matrix * diagonalCalculus(CompactRealSet::sigma0(n)).matrix(parseRule("chi_leq_0")) *
                        u.matrix;
  EXPECT_LE((direct.col(0) - y).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ConjugatedCalculus, RejectsNonInverses) {
  const auto set = CompactRealSet::sigma0(4);
  const auto [u, uInv] = uIsoC0(4);
  OperatorModel bad = uInv;
  bad.matrix(0, 0) += 0.5;
  EXPECT_THROW(conjugatedCalculus(diagonalCalculus(set), u, bad), InvalidArgument);
}

TEST(Phi, NonUniqueExtensionWitness) {
  const std::size_t n = 12;
  const auto p1 = phi1(n);
  const auto p2 = phi2(n);
  Matrix e00 = Matrix::Zero(n + 1, n + 1);
  e00(0, 0) = 1;
  EXPECT_EQ(p1.matrix(parseRule("chi_point_0")), e00);
  EXPECT_EQ(p2.matrix(parseRule("chi_point_0")), Matrix::Zero(n + 1, n + 1));
  const auto open = parseRule("chi:(0,1]");
  EXPECT_EQ(p1.matrix(open), Matrix(Matrix::Identity(n + 1, n + 1) - e00));
  EXPECT_EQ(p2.matrix(open), Matrix::Identity(n + 1, n + 1));
}

TEST(Phi, AgreeOnContinuousRulesAndExtendDiagonalCalculus) {
  const std::size_t n = 15;
  const auto p1 = phi1(n);
  const auto p2 = phi2(n);
  const auto cont = continuousPart(standardCatalog(), p1.spectrum());
  EXPECT_GE(cont.size(), 5U);
  for (const auto& f : cont) {
    EXPECT_EQ(p1.matrix(f), p2.matrix(f)) << f.id();
    const Matrix m = p1.matrix(f);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      EXPECT_EQ(m(i, i), f(Rational(1, static_cast<std::int64_t>(k))));
    }
  }
  for (const auto& f : monomialCatalog(5)) EXPECT_EQ(p1.matrix(f), p2.matrix(f));
}

TEST(HomomorphismCheck, ShippedCalculiPass) {
  const auto catalog = standardCatalog();
  const auto set = CompactRealSet::sigma0(10);
  const auto [u, uInv] = uIsoC0(10);
  const std::vector<CalculusMap> calculi{
      diagonalCalculus(set),
      conjugatedCalculus(diagonalCalculus(set), u, uInv),
      phi1(20),
      phi2(20),
      directSumCalculus(diagonalCalculus(set), Rational(3, 2), 3),
      idempotentCalculus(randomIdempotent(5, 2, 1), SpaceTag::sup(5)),
  };
  for (const auto& c : calculi) {
    const auto r = homomorphismCheck(c, catalog, 1e-10);
    EXPECT_TRUE(r.pass) << c.name() << " " << r.worstLaw << " " << r.worstDefect;
    EXPECT_EQ(r.catalogSize, catalog.size());
  }
  EXPECT_TRUE(homomorphismCheck(diagonalCalculus(set), monomialCatalog(5), 1e-10).pass);
  EXPECT_TRUE(homomorphismCheck(phi2(20), phiCatalog(), 1e-10).pass);
}

TEST(HomomorphismCheck, CorruptedMapFailsWithWitness) {
  const auto set = CompactRealSet::sigma0(6);
  const auto base = diagonalCalculus(set);
  const CalculusMap corrupted("corrupted", base.space(), set, [base](const FunctionRule& f) {
    Matrix m = base.matrix(f);
    m(0, 1) += 0.25;
    return m;
  });
  const auto r = homomorphismCheck(corrupted, standardCatalog(), 1e-10);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.worstDefect, 0.0);
  EXPECT_FALSE(r.witness.first.empty());
}

TEST(CalculusBound, Examples) {
  const auto set = CompactRealSet::sigma0(8);
  const auto diag = calculusBound(diagonalCalculus(set), standardCatalog(), BoundNorm::BV);
  EXPECT_LE(diag.bound, 1.0);
  EXPECT_TRUE(diag.allExact);
  // Oracle: max over the catalog of ||f||_inf / (||f||_inf + var f).
  double expected = 0.0;
  for (const auto& f : standardCatalog()) {
    const auto b = restrict(f, set);
    if (bvNorm(b) > 0) expected = std::max(expected, supNorm(b) / bvNorm(b));
  }
  EXPECT_DOUBLE_EQ(diag.bound, expected);

  const auto single = CompactRealSet::fromPoints({Rational(1)});
  const std::vector<FunctionRule> constants{parseRule("one"), FunctionRule::constant(3.0)};
  EXPECT_DOUBLE_EQ(calculusBound(diagonalCalculus(single), constants, BoundNorm::BV).bound, 1.0);

  const auto [u, uInv] = uIsoC0(8);
  const auto conj = conjugatedCalculus(diagonalCalculus(set), u, uInv);
  const auto cb = calculusBound(conj, standardCatalog(), BoundNorm::BV);
  EXPECT_LE(cb.bound, operatorNorm(u).value * operatorNorm(uInv).value + 1e-12);

  const auto ac = calculusBound(diagonalCalculus(set), standardCatalog(), BoundNorm::ACProxy);
  EXPECT_EQ(ac.rulesUsed, continuousPart(standardCatalog(), set).size());
  EXPECT_THROW(calculusBound(diagonalCalculus(set), {}, BoundNorm::BV), InvalidArgument);
}

TEST(DirectSumCalculus, ProjectionOntoBaseSpace) {
  const auto set = CompactRealSet::sigma0(7);
  const auto sum = directSumCalculus(diagonalCalculus(set), Rational(1) + set.max(), 2);
  const auto chi = FunctionRule::interval(set.min(), true, set.max(), true);
  Matrix expected = Matrix::Zero(10, 10);
  expected.topLeftCorner(8, 8).setIdentity();
  EXPECT_EQ(sum.matrix(chi), expected);
  EXPECT_EQ(sum.matrix(parseRule("id"))(9, 9), Scalar(1.5));
}

TEST(IdempotentCalculus, FormulaAndLaws) {
  const Matrix p = randomIdempotent(6, 2, 8);
  EXPECT_EQ(p * p, p);
  const auto c = idempotentCalculus(p, SpaceTag::sup(6));
  const auto f = parseRule("poly:2,-3,1");  // f(0) = 1, f(1) = 0
  const Matrix i = Matrix::Identity(6, 6);
  EXPECT_EQ(c.matrix(f), Matrix(i - p));
  EXPECT_EQ(c.generator().matrix, p);
  Matrix notIdem = p;
  notIdem(0, 0) += 1;
  EXPECT_THROW(idempotentCalculus(notIdem, SpaceTag::sup(6)), InvalidArgument);
}
