// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion holds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "acfc/catalog.hpp"
#include "acfc/cli.hpp"
#include "acfc/counterexamples.hpp"
#include "acfc/functional_calculus.hpp"
#include "acfc/lp_extrapolation.hpp"
#include "oracles.hpp"

using namespace acfc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

Vector valuesOf(const BVFunction& f) {
  Vector v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) v[static_cast<Eigen::Index>(i)] = f.at(i);
  return v;
}

std::vector<FunctionRule> rangeCatalog(std::size_t n) {
  auto c = standardCatalog();
  for (const auto& f : leftAnnihilatorCatalog(n)) c.push_back(f);
  for (const auto& f : rightAnnihilatorCatalog(n)) c.push_back(f);
  return c;
}

void functionAlgebra(Outcome& o) {
  const auto catalog = standardCatalog();
  double worstSub = -kInf;
  double worstMul = -kInf;
  for (std::size_t n : {4, 10, 100}) {
    const auto set = CompactRealSet::sigma0(n);
    for (const auto& f : catalog) {
      const auto bf = restrict(f, set);
      for (const auto& g : catalog) {
        const auto bg = restrict(g, set);
        worstSub = std::max(worstSub, variation(add(bf, bg)) - variation(bf) - variation(bg));
        worstMul = std::max(worstMul, bvNorm(mul(bf, bg)) - bvNorm(bf) * bvNorm(bg));
      }
    }
  }
  o.require(worstSub <= 1e-12, "subadditivity");
  o.require(worstMul <= 1e-12, "submultiplicativity");

  // Brute-force partition oracle on every set with at most 10 points: the
  // sigma0 truncations, interval grids and random generic sets, using
  // catalog rules and random integer-valued functions.
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> value(-20, 20);
  std::vector<CompactRealSet> sets;
  for (std::size_t n = 1; n <= 9; ++n) sets.push_back(CompactRealSet::sigma0(n));
  for (std::size_t n = 2; n <= 10; ++n) sets.push_back(CompactRealSet::intervalGrid(Rational(-1), Rational(1), n));
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> pts;
    const std::size_t size = 1 + rng() % 10;
    while (pts.size() < size) {
      const Rational t(static_cast<std::int64_t>(rng() % 201) - 100, 37);
      if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
    }
    sets.push_back(CompactRealSet::fromPoints(pts));
  }
  // Integer-valued functions keep every partial sum exact, so they must match
  // bit for bit. Catalog rules take non-dyadic values such as 1/3; there a
  // sub-partition sum can round one ulp above the consecutive sum, so the
  // comparison allows a few ulps.
  std::size_t comparisons = 0;
  std::size_t exactMismatches = 0;
  double worstUlps = 0.0;
  for (const auto& set : sets) {
    for (const auto& f : catalog) {
      const auto bf = restrict(f, set);
      const double lib = variation(bf);
      const double ref = oracle::bruteForceVariation(bf.values());
      worstUlps = std::max(worstUlps, std::abs(lib - ref) / (std::numeric_limits<double>::epsilon() * std::max(1.0, ref)));
      ++comparisons;
    }
    for (int t = 0; t < 10; ++t) {
      std::vector<Scalar> v(set.size());
      for (auto& x : v) x = Scalar(value(rng));
      ++comparisons;
      if (variation(BVFunction(set, v)) != oracle::bruteForceVariation(v)) ++exactMismatches;
    }
  }
  o.require(exactMismatches == 0, "partition oracle (integer values)");
  o.require(worstUlps <= 4.0, "partition oracle (catalog rules)");
  o.detail << "subExcess=" << worstSub << " mulExcess=" << worstMul << " partitionChecks=" << comparisons
           << " integerMismatches=" << exactMismatches << " catalogWorstUlps=" << worstUlps;
}

void isomorphisms(Outcome& o) {
  std::mt19937_64 rng(2);
  double worstRound = 0.0;
  double worstForward = 0.0;
  double worstInverse = 0.0;
  for (std::size_t n : {10, 100}) {
    const auto [u, uInv] = uIsoC0(n);
    const Ell1Iso iso(n);
    const auto dim = static_cast<Eigen::Index>(n + 1);
    for (int trial = 0; trial < 1000; ++trial) {
      const Vector x = oracle::randomVector(dim, rng);
      worstRound = std::max(worstRound, (uInv.matrix * (u.matrix * x) - x).cwiseAbs().maxCoeff());
      worstRound = std::max(worstRound, (u.matrix * (uInv.matrix * x) - x).cwiseAbs().maxCoeff());

      const auto g = restrict(randomRule(rng()), iso.set());
      const Vector coords = iso.forward(g);
      worstRound = std::max(worstRound, (valuesOf(iso.inverse(coords)) - valuesOf(g)).cwiseAbs().maxCoeff());
      worstRound = std::max(worstRound, (iso.forward(iso.inverse(x)) - x).cwiseAbs().maxCoeff());
      const double fwd = oracle::pNorm(coords, 1.0) - bvNorm(g);
      const double inv = bvNorm(iso.inverse(x)) - 2.0 * oracle::pNorm(x, 1.0);
      worstForward = std::max(worstForward, fwd / std::max(1.0, bvNorm(g)));
      worstInverse = std::max(worstInverse, inv / oracle::pNorm(x, 1.0));
    }
  }
  o.require(worstRound <= 1e-12, "round trip");
  o.require(worstForward <= 1e-12, "forward inequality");
  o.require(worstInverse <= 1e-12, "inverse inequality");
  o.detail << "roundTrip=" << worstRound << " forwardExcess=" << worstForward << " inverseExcess=" << worstInverse;
}

void calculi(Outcome& o) {
  const auto catalog = standardCatalog();
  for (std::size_t n : {4, 10, 100}) {
    const auto set = CompactRealSet::sigma0(n);
    const auto diag = diagonalCalculus(set);
    for (const auto& f : catalog) {
      const auto norm = operatorNorm(diag.evaluate(f));
      o.require(norm.exact && norm.value == supNorm(restrict(f, set)), "diagonal norm identity for " + f.id());
    }
  }
  const auto set = CompactRealSet::sigma0(20);
  const auto [u, uInv] = uIsoC0(20);
  const std::vector<CalculusMap> shipped{
      diagonalCalculus(set),
      conjugatedCalculus(diagonalCalculus(set), u, uInv),
      phi1(20),
      phi2(20),
      directSumCalculus(diagonalCalculus(set), Rational(1) + set.max(), 3),
      idempotentCalculus(randomIdempotent(6, 3, 5), SpaceTag::sup(6)),
  };
  double worst = 0.0;
  for (const auto& c : shipped) {
    const auto r = homomorphismCheck(c, catalog, 1e-10);
    o.require(r.pass, "homomorphism " + c.name());
    worst = std::max(worst, r.worstDefect);
  }
  o.detail << "calculi=" << shipped.size() << " worstHomDefect=" << worst;
}

void nonUniqueness(Outcome& o) {
  for (std::size_t n : {2, 10, 50}) {
    const auto p1 = phi1(n);
    const auto p2 = phi2(n);
    const auto dim = static_cast<Eigen::Index>(n + 1);
    Matrix e00 = Matrix::Zero(dim, dim);
    e00(0, 0) = 1;
    const auto witness = parseRule("chi_point_0");
    o.require(p1.matrix(witness) == e00, "phi1 witness");
    o.require(p2.matrix(witness) == Matrix::Zero(dim, dim), "phi2 witness");
    // Continuity at 0 decided from the rule values, not the library check.
    for (const auto& f : standardCatalog()) {
      const bool continuous = f(Rational(0)) == f.limitFromRight(Rational(0));
      if (continuous) o.require(p1.matrix(f) == p2.matrix(f), "agreement on " + f.id());
    }
  }
  o.detail << "witness=chi_point_0";
}

void c0Obstruction(Outcome& o) {
  const auto chiL = parseRule("chi_leq_0");
  std::size_t checked = 0;
  for (std::size_t n = 4; n <= 1000; ++n) {
    const std::size_t window = std::min<std::size_t>(5, (n - 1) / 2);
    const auto r = c0ObstructionDemo(n, 0.0, window);
    // Closed form of chi_L(T)e0 in c0 coordinates: entry k is chi_L(t_k) - chi_L(0).
    double closedForm = 0.0;
    for (std::size_t k = n - 2 * window + 1; k <= n; ++k) {
      const Rational t(k % 2 ? -1 : 1, static_cast<std::int64_t>(k));
      closedForm = std::max(closedForm, std::abs(chiL(t) - chiL(Rational(0))));
    }
    o.require(r.feasible && r.tailDefect == 1.0 && closedForm == 1.0, "tailDefect at n=" + std::to_string(n));
    o.require(r.constraintDefect == 0.0, "constraintDefect(0) at n=" + std::to_string(n));
    ++checked;
  }
  for (double eps : {0.1, 0.01}) {
    const auto r = c0ObstructionDemo(100, eps, 5);
    o.require(r.feasible && r.constraintDefect <= eps, "constraintDefect(eps)");
    o.detail << "constraintDefect(" << eps << ")=" << r.constraintDefect << " ";
  }
  o.detail << "nChecked=" << checked;
}

void rangeInclusion(Outcome& o) {
  std::size_t runs = 0;
  for (std::size_t n = 4; n <= 100; ++n) {
    const auto set = CompactRealSet::sigma0(n);
    const auto catalog = rangeCatalog(n);
    for (const auto& lambda : {Rational(0), Rational(-1, 3), Rational(1, 4)}) {
      const auto r = rangeInclusionCheck(set, lambda, catalog);
      o.require(r.pass && r.worstDefect == 0.0, "range inclusion n=" + std::to_string(n));
      ++runs;
    }
    const auto sum = directSumCalculus(diagonalCalculus(set), Rational(1) + set.max(), 2);
    const Matrix p = sum.matrix(FunctionRule::interval(set.min(), true, set.max(), true));
    Matrix expected = Matrix::Zero(p.rows(), p.cols());
    expected.topLeftCorner(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1)).setIdentity();
    o.require(p == expected, "direct sum projection n=" + std::to_string(n));
  }
  o.detail << "rangeChecks=" << runs;
}

void extrapolation(Outcome& o) {
  double worstMargin = kInf;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Matrix a = randomComplexMatrix(20, 20, 1000 + seed);
    const auto r = rieszThorinCheck(a, 1.0, kInf, 0.5, 1e-9);
    o.require(r.lhsExact, "exact endpoint norms");
    // Recompute both sides with the oracle.
    const double margin = std::sqrt(maxAbsColSum(a) * maxAbsRowSum(a)) - oracle::svdNorm(a);
    o.require(std::abs(margin - r.margin) <= 1e-9 * r.rhs, "margin oracle");
    worstMargin = std::min(worstMargin, r.margin);
  }
  o.require(worstMargin >= -1e-9, "riesz-thorin margin");

  double worstDuality = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = dualityIdentityCheck(randomComplexMatrix(20, 20, 5000 + seed), 100, seed, 1e-12);
    worstDuality = std::max(worstDuality, r.worstDefect);
  }
  o.require(worstDuality <= 1e-12, "duality identity");

  const auto diag = adjointCalculusRight(CompactRealSet::sigma0(12), standardCatalog(), 1e-12, 1);
  o.require(diag.pass && diag.productDefect == 0.0 && diag.antiProductDefect == 0.0, "adjoint diagonal");
  const std::vector<FunctionRule> integer{parseRule("one"), parseRule("id"), parseRule("poly:2,-3,1"),
                                          parseRule("chi_point_0"), parseRule("chi_point_1"),
                                          parseRule("chi_gt_1/2")};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = idempotentCalculus(randomIdempotent(8, 1 + seed % 7, seed), SpaceTag::lp(1, 8));
    const auto r = adjointCalculusRight(c, integer, 0.0, seed);
    o.require(r.pass && r.productDefect == 0.0 && r.antiProductDefect == 0.0, "adjoint idempotent");
  }
  o.detail << "worstMargin=" << worstMargin << " worstDuality=" << worstDuality;
}

void banachLimit(Outcome& o) {
  for (std::size_t m : {1, 5, 40}) {
    const auto t = limitToFirstOperator(m).matrix;
    const auto s = limitToConstantOperator(m).matrix;
    const auto dim = static_cast<Eigen::Index>(m + 1);
    o.require(t * t == Matrix::Zero(dim, dim), "T^2 = 0");
    o.require(t != Matrix::Zero(dim, dim), "T != 0");
    // Sup norm of T: max row sum, computed directly.
    o.require(t.cwiseAbs().rowwise().sum().maxCoeff() == 1.0, "||T|| = 1");
    o.require(operatorNorm(limitToFirstOperator(m)).value == 1.0, "library ||T|| = 1");
    o.require(s * s == s, "S^2 = S");
    for (Eigen::Index i = 0; i + 1 < dim; ++i)
      o.require(s * Vector::Unit(dim, i) == Vector::Zero(dim), "S kills tail-0 vectors");
    const auto r = banachLimitDemo(m);
    o.require(r.pass && r.disagreementFull != r.disagreementFinite, "calculi disagree on chi_point_1");
    // Direct substitution: f(S) = f(0)(I - S) + f(1)S versus f(0)I on the constant 1.
    const Vector one = Vector::Ones(dim);
    const Vector full = (0.0 * (Matrix::Identity(dim, dim) - s) + 1.0 * s) * one;
    o.require(full == one, "f(S_inf) 1 = 1");
  }
  o.detail << "models=3";
}

void determinism(Outcome& o) {
  cli::RunConfig config;
  config.command = "check all";
  config.seed = 7;
  config.format = "json";
  const std::string a = cli::runCommand(config).dump(2);
  const std::string b = cli::runCommand(config).dump(2);
  std::ostringstream out1;
  std::ostringstream out2;
  std::ostringstream err;
  const int c1 = cli::runCli({"check", "all", "--seed", "7", "--format", "json"}, out1, err);
  const int c2 = cli::runCli({"check", "all", "--seed", "7", "--format", "json"}, out2, err);
  o.require(a == b, "runCommand output differs");
  o.require(out1.str() == out2.str(), "CLI output differs");
  o.require(c1 == c2, "exit codes differ");
  o.detail << "bytes=" << out1.str().size() << " exit=" << c1;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "function algebra suite", functionAlgebra},
      {2, "isomorphism suite", isomorphisms},
      {3, "calculus suite", calculi},
      {4, "non-uniqueness of extensions", nonUniqueness},
      {5, "c0 obstruction", c0Obstruction},
      {6, "range inclusion and direct sum projection", rangeInclusion},
      {7, "extrapolation suite", extrapolation},
      {8, "Banach-limit model", banachLimit},
      {9, "determinism of check all --seed 7", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
