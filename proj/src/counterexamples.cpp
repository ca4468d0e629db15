#include "acfc/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "acfc/catalog.hpp"
#include "acfc/errors.hpp"

namespace acfc {

double ConvergentSeqModel::supNorm() const {
  double m = std::abs(tail);
  if (head.size() > 0) m = std::max(m, head.cwiseAbs().maxCoeff());
  return m;
}

Vector ConvergentSeqModel::coords() const {
  Vector v(head.size() + 1);
  v.head(head.size()) = head;
  v[head.size()] = tail;
  return v;
}

ConvergentSeqModel ConvergentSeqModel::fromCoords(const Vector& coords) {
  if (coords.size() == 0) throw InvalidArgument("convergent sequence needs a tail coordinate");
  return {coords.head(coords.size() - 1), coords[coords.size() - 1]};
}

ConvergentSeqModel ConvergentSeqModel::constant(std::size_t m, Scalar c) {
  return {Vector::Constant(static_cast<Eigen::Index>(m), c), c};
}

OperatorModel limitToFirstOperator(std::size_t m) {
  if (m == 0) throw InvalidArgument("head length must be at least 1");
  const auto dim = static_cast<Eigen::Index>(m + 1);
  Matrix t = Matrix::Zero(dim, dim);
  t(0, dim - 1) = 1.0;
  return OperatorModel(std::move(t), SpaceTag::sup(m + 1));
}

OperatorModel limitToConstantOperator(std::size_t m) {
  if (m == 0) throw InvalidArgument("head length must be at least 1");
  const auto dim = static_cast<Eigen::Index>(m + 1);
  Matrix s = Matrix::Zero(dim, dim);
  s.col(dim - 1).setOnes();
  return OperatorModel(std::move(s), SpaceTag::sup(m + 1));
}

RangeInclusionReport rangeInclusionCheck(const CompactRealSet& set, const Rational& lambda,
                                         const std::vector<FunctionRule>& catalog,
                                         const std::optional<Matrix>& projectionOverride) {
  if (!set.contains(lambda)) {
    throw InvalidArgument("rangeInclusionCheck: lambda = " + lambda.toString() +
                          " is not a point of the set");
  }
  const auto calculus = diagonalCalculus(set);
  const auto n = static_cast<Eigen::Index>(set.size());
  const Matrix p = projectionOverride ? *projectionOverride : calculus.matrix(FunctionRule::atMost(lambda));
  if (p.rows() != n || p.cols() != n) throw InvalidArgument("rangeInclusionCheck: projection has wrong shape");
  const Matrix q = Matrix::Identity(n, n) - p;
  const Matrix t = calculus.matrix(FunctionRule::identity());

  RangeInclusionReport report;
  report.lambda = lambda;
  auto note = [&](double defect, const std::string& what) {
    if (defect > report.worstDefect) {
      report.worstDefect = defect;
      report.witness = what;
    }
  };
  note((p * p - p).cwiseAbs().maxCoeff(), "P^2 != P");
  note((p * t - t * p).cwiseAbs().maxCoeff(), "PT != TP");

  for (const auto& f : catalog) {
    const auto values = restrict(f, set);
    const Matrix image = calculus.matrix(f);
    if (vanishesAtOrBelow(values, lambda)) {
      ++report.leftRulesChecked;
      note((image * p).cwiseAbs().maxCoeff(), "f(T)P != 0 for " + f.id());
    }
    if (vanishesAtOrAbove(values, lambda)) {
      ++report.rightRulesChecked;
      note((image * q).cwiseAbs().maxCoeff(), "f(T)Q != 0 for " + f.id());
    }
  }
  report.pass = report.worstDefect == 0.0;
  return report;
}

std::vector<FunctionRule> leftAnnihilatorCatalog(std::size_t n) {
  std::vector<FunctionRule> out;
  for (std::size_t k = 2; k <= n; k += 2) out.push_back(FunctionRule::point(Rational(1, static_cast<std::int64_t>(k))));
  out.push_back((FunctionRule::identity() * FunctionRule::above(0)).withId("id*chi_gt_0"));
  return out;
}

std::vector<FunctionRule> rightAnnihilatorCatalog(std::size_t n) {
  std::vector<FunctionRule> out;
  for (std::size_t k = 1; k <= n; k += 2) out.push_back(FunctionRule::point(Rational(-1, static_cast<std::int64_t>(k))));
  out.push_back((FunctionRule::identity() * FunctionRule::below(0)).withId("id*chi_lt_0"));
  return out;
}

namespace {

// Indices of the K points of each sign nearest 0 in sigma0(n).
std::vector<std::size_t> nearZeroIndices(std::size_t n, std::size_t window) {
  std::vector<std::size_t> out;
  for (std::size_t parity = 0; parity < 2; ++parity) {
    std::size_t k = (n % 2 == parity) ? n : n - 1;
    for (std::size_t taken = 0; taken < window && k >= 1; ++taken) {
      out.push_back(sigma0Index(n, k));
      if (k < 2) break;
      k -= 2;
    }
  }
  return out;
}

// max |x(0)| subject to |x| <= 1, f(T)x = 0 for the catalog, and
// |x(t) - x(0)| <= eps on the constrained points, for T the multiplication
// operator on C(set). The constraints are interval bounds, so the optimum is
// min(1, cap_i + eps) with cap_i = 0 on annihilated coordinates and 1
// elsewhere. Since (f(T)x)(t) = f(t)x(t), only the coordinates that can carry
// the witness (the limit point and the constrained points) need evaluating.
FeasibilityResult solveNearZero(const CompactRealSet& set, const std::vector<FunctionRule>& annihilators,
                                const std::vector<std::size_t>& constrained, std::size_t zero,
                                double epsilon) {
  std::vector<std::size_t> relevant = constrained;
  relevant.push_back(zero);
  std::vector<bool> killed(set.size(), false);
  for (const auto& f : annihilators) {
    for (auto i : relevant) {
      if (f(set.points()[i]) != Scalar(0.0)) killed[i] = true;
    }
  }

  FeasibilityResult result;
  double best = killed[zero] ? 0.0 : 1.0;
  for (auto i : constrained) best = std::min(best, (killed[i] ? 0.0 : 1.0) + epsilon);
  result.maxAbsAtZero = best;

  Vector x = Vector::Zero(static_cast<Eigen::Index>(set.size()));
  x[static_cast<Eigen::Index>(zero)] = best;
  for (auto i : constrained) {
    if (!killed[i]) x[static_cast<Eigen::Index>(i)] = best;
  }
  // Verify the witness: f(t_i) x_i = 0 wherever x_i != 0.
  for (const auto& f : annihilators) {
    for (auto i : relevant) {
      if (f(set.points()[i]) * x[static_cast<Eigen::Index>(i)] != Scalar(0.0)) result.feasible = false;
    }
  }
  for (auto i : constrained) {
    if (std::abs(x[static_cast<Eigen::Index>(i)] - x[static_cast<Eigen::Index>(zero)]) > epsilon) {
      result.feasible = false;
    }
  }
  if (x.cwiseAbs().maxCoeff() > 1.0) result.feasible = false;
  result.witness = std::move(x);
  return result;
}

}  // namespace

ObstructionReport c0ObstructionDemo(std::size_t n, double epsilon, std::size_t window) {
  return c0ObstructionDemo(n, epsilon, window, FunctionRule::atMost(0).withId("chi_leq_0"));
}

ObstructionReport c0ObstructionDemo(std::size_t n, double epsilon, std::size_t window,
                                    const FunctionRule& rule) {
  ObstructionReport report;
  report.n = n;
  report.epsilon = epsilon;
  report.tailWindow = window;
  report.rule = rule.id();
  if (n == 0 || window == 0 || 2 * window >= n) {
    report.feasible = false;
    report.message = "need 1 <= K < n/2 (n = " + std::to_string(n) + ", K = " + std::to_string(window) + ")";
    return report;
  }
  if (!(epsilon >= 0.0)) {
    report.feasible = false;
    report.message = "epsilon must be nonnegative";
    return report;
  }

  const auto set = CompactRealSet::sigma0(n);
  const auto diag = diagonalCalculus(set);
  const auto [u, uInv] = uIsoC0(n);
  const auto onC0 = conjugatedCalculus(diag, u, uInv);

  const Vector image = onC0.apply(rule, Vector::Unit(static_cast<Eigen::Index>(n + 1), 0));
  const std::size_t first = n - 2 * window + 1;
  for (std::size_t k = first; k <= n; ++k) {
    const double v = std::abs(image[static_cast<Eigen::Index>(k)]);
    if (k == first || v > report.tailDefect) {
      report.tailDefect = v;
      report.tailWitnessIndex = k;
    }
  }

  const auto constrained = nearZeroIndices(n, window);
  const std::size_t zero = sigma0ZeroIndex(n);
  const auto left = solveNearZero(set, leftAnnihilatorCatalog(n), constrained, zero, epsilon);
  const auto right = solveNearZero(set, rightAnnihilatorCatalog(n), constrained, zero, epsilon);
  report.constraintDefectLeft = left.maxAbsAtZero;
  report.constraintDefectRight = right.maxAbsAtZero;
  report.constraintDefect = std::max(left.maxAbsAtZero, right.maxAbsAtZero);
  report.feasible = left.feasible && right.feasible;
  if (!report.feasible) report.message = "witness vector violates the constraints";
  return report;
}

Ell1IsoReport ell1IsoDemo(std::size_t n, std::size_t trials, std::uint64_t seed) {
  const Ell1Iso iso(n);
  Ell1IsoReport report;
  report.n = n;
  report.trials = trials;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const auto dim = static_cast<Eigen::Index>(n + 1);
  constexpr double kSlack = 1e-12;
  bool ok = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto rule = randomRule(rng());
    const auto g = restrict(rule, iso.set());
    const Vector coords = iso.forward(g);
    const double norm = bvNorm(g);
    if (norm > 0.0) {
      const double ratio = vectorPNorm(coords, 1.0) / norm;
      if (ratio > report.worstForwardRatio) {
        report.worstForwardRatio = ratio;
        report.worstForwardRule = rule.id();
      }
      ok = ok && ratio <= 1.0 + kSlack;
    }
    const auto back = iso.inverse(coords);
    for (std::size_t i = 0; i < g.size(); ++i) {
      report.worstFunctionRoundTrip = std::max(report.worstFunctionRoundTrip, std::abs(back.at(i) - g.at(i)));
    }

    Vector x(dim);
    for (Eigen::Index i = 0; i < dim; ++i) x[i] = Scalar(gauss(rng), gauss(rng));
    const auto h = iso.inverse(x);
    const double inverseRatio = bvNorm(h) / vectorPNorm(x, 1.0);
    report.worstInverseRatio = std::max(report.worstInverseRatio, inverseRatio);
    ok = ok && inverseRatio <= 2.0 + kSlack;
    report.worstVectorRoundTrip =
        std::max(report.worstVectorRoundTrip, (iso.forward(h) - x).cwiseAbs().maxCoeff());
  }
  report.pass = ok && report.worstFunctionRoundTrip <= 1e-12 && report.worstVectorRoundTrip <= 1e-12;
  return report;
}

namespace {

CalculusMap scalarAtZeroCalculus(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return CalculusMap("scalar-at-zero[" + std::to_string(dim) + "]", SpaceTag::sup(dim),
                     CompactRealSet::fromPoints({Rational(0)}),
                     [d](const FunctionRule& f) -> Matrix { return f(Rational(0)) * Matrix::Identity(d, d); });
}

std::vector<FunctionRule> zeroOneCatalog() {
  return {parseRule("one"),         parseRule("id"),          parseRule("poly:1,0,0"),
          parseRule("poly:2,-3,1"), parseRule("chi_point_0"), parseRule("chi_point_1"),
          parseRule("chi_leq_0"),   parseRule("chi_gt_1/2")};
}

}  // namespace

BanachLimitReport banachLimitDemo(std::size_t m) {
  BanachLimitReport report;
  report.m = m;
  const auto t = limitToFirstOperator(m);
  const auto s = limitToConstantOperator(m);
  const auto dim = static_cast<Eigen::Index>(m + 1);

  report.tSquaredDefect = (t.matrix * t.matrix).cwiseAbs().maxCoeff();
  report.tNonzero = t.matrix.cwiseAbs().maxCoeff() > 0.0;
  report.tNorm = operatorNorm(t).value;
  report.sIdempotentDefect = (s.matrix * s.matrix - s.matrix).cwiseAbs().maxCoeff();

  // Every finitely supported vector lies in the span of the head coordinates.
  report.sKillsFinitelySupported = s.matrix.leftCols(dim - 1).cwiseAbs().maxCoeff() == 0.0;
  const Vector one = ConvergentSeqModel::constant(m, 1.0).coords();
  report.sFixesConstant = (s.matrix * one - one).cwiseAbs().maxCoeff();

  const auto catalog = zeroOneCatalog();
  const auto finite = scalarAtZeroCalculus(m);
  const auto full = idempotentCalculus(s.matrix, SpaceTag::sup(m + 1));
  report.finiteCalculusDefect = homomorphismCheck(finite, catalog, 0.0).worstDefect;
  report.fullCalculusDefect = homomorphismCheck(full, catalog, 0.0).worstDefect;
  // The full calculus must send the identity function to S itself.
  report.fullCalculusDefect = std::max(report.fullCalculusDefect,
                                       (full.matrix(FunctionRule::identity()) - s.matrix).cwiseAbs().maxCoeff());

  const auto chiOne = FunctionRule::point(1);
  report.disagreementFull = ConvergentSeqModel::fromCoords(full.matrix(chiOne) * one).supNorm();
  report.disagreementFinite = ConvergentSeqModel::fromCoords(chiOne(Rational(0)) * one).supNorm();

  report.pass = report.tSquaredDefect == 0.0 && report.tNonzero && report.tNorm == 1.0 &&
                report.sIdempotentDefect == 0.0 && report.sKillsFinitelySupported &&
                report.sFixesConstant == 0.0 && report.finiteCalculusDefect == 0.0 &&
                report.fullCalculusDefect == 0.0 && report.disagreementFull == 1.0 &&
                report.disagreementFinite == 0.0;
  return report;
}

}  // namespace acfc
