#include "acfc/lp_extrapolation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "acfc/errors.hpp"

namespace acfc {

namespace {

bool isExactEndpoint(double p) { return p == 1.0 || p == 2.0 || std::isinf(p); }

double reciprocal(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

Vector randomUnitVector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Scalar(gauss(rng), gauss(rng));
  const double len = v.norm();
  return len > 0.0 ? Vector(v / len) : v;
}

}  // namespace

std::vector<PNormSample> pNormProfile(const Matrix& a, const std::vector<double>& ps,
                                      const NormOptions& options) {
  std::vector<PNormSample> out;
  out.reserve(ps.size());
  for (double p : ps) {
    const auto est = matrixPNorm(a, p, options);
    out.push_back({p, est.value, est.exact});
  }
  return out;
}

PScaleFamily makePScaleFamily(const Matrix& a, double r, double s, const std::vector<double>& ps,
                              const NormOptions& options) {
  if (!(r >= 1.0 && r < s)) throw InvalidArgument("p-scale family needs 1 <= r < s");
  for (double p : ps) {
    if (p < r || p > s) throw InvalidArgument("sampled p outside [r, s]");
  }
  return {a, r, s, pNormProfile(a, ps, options)};
}

RieszThorinReport rieszThorinCheck(const Matrix& a, double p0, double p1, double theta, double tol,
                                   const NormOptions& options) {
  if (!isExactEndpoint(p0) || !isExactEndpoint(p1)) {
    throw InvalidArgument("rieszThorinCheck: endpoints must be 1, 2 or inf");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidArgument("rieszThorinCheck: theta must lie in [0, 1]");

  RieszThorinReport report;
  report.p0 = p0;
  report.p1 = p1;
  report.theta = theta;
  const double inv = (1.0 - theta) * reciprocal(p0) + theta * reciprocal(p1);
  report.pTheta = inv == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv;

  const auto lhs = matrixPNorm(a, report.pTheta, options);
  report.lhs = lhs.value;
  report.lhsExact = lhs.exact;
  const double n0 = matrixPNorm(a, p0).value;
  const double n1 = matrixPNorm(a, p1).value;
  report.rhs = std::pow(n0, 1.0 - theta) * std::pow(n1, theta);
  report.margin = report.rhs - report.lhs;
  report.pass = report.margin >= -tol;
  return report;
}

DualityReport dualityIdentityCheck(const Matrix& a, std::size_t trials, std::uint64_t seed, double tol) {
  DualityReport report;
  report.trials = trials;
  const Matrix aStar = a.adjoint();
  const Matrix v = aStar.adjoint();
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector x = randomUnitVector(a.cols(), rng);
    const Vector y = randomUnitVector(a.rows(), rng);
    const Scalar viaV = y.dot(v * x);
    const Scalar viaAdjoint = (aStar * y).dot(x);
    const Scalar direct = y.dot(a * x);
    report.worstDefect = std::max({report.worstDefect, std::abs(viaV - viaAdjoint), std::abs(viaAdjoint - direct)});
  }
  report.pass = report.worstDefect <= tol;
  return report;
}

ExtensionReport extendCalculusLeft(const CompactRealSet& set, const std::vector<FunctionRule>& catalog,
                                   const std::vector<double>& ps, double tol, std::uint64_t seed) {
  if (ps.empty()) throw InvalidArgument("extendCalculusLeft: no exponents sampled");
  ExtensionReport report;
  report.ps = ps;
  report.catalogSize = catalog.size();

  std::vector<CalculusMap> calculi;
  for (double p : ps) calculi.push_back(diagonalCalculus(set, SpaceTag::lp(p, set.size())));
  report.calculus = calculi.front().name();

  std::mt19937_64 rng(seed);
  const Vector shared = randomUnitVector(static_cast<Eigen::Index>(set.size()), rng);
  NormOptions options;
  options.seed = seed;

  for (const auto& f : catalog) {
    const Vector reference = calculi.front().apply(f, shared);
    const double denom = bvNorm(restrict(f, set));
    for (const auto& c : calculi) {
      report.consistencyDefect =
          std::max(report.consistencyDefect, (c.matrix(f) * shared - reference).cwiseAbs().maxCoeff());
      const auto est = operatorNorm(c.evaluate(f), options);
      report.allNormsExact = report.allNormsExact && est.exact;
      if (denom > 0.0) report.worstBoundRatio = std::max(report.worstBoundRatio, est.value / denom);
    }
  }

  const auto endpoint = std::min_element(ps.begin(), ps.end()) - ps.begin();
  const auto& u = calculi[static_cast<std::size_t>(endpoint)];
  for (const auto& f : catalog) {
    for (const auto& g : catalog) {
      report.productDefect =
          std::max(report.productDefect, (u.matrix(f * g) - u.matrix(f) * u.matrix(g)).cwiseAbs().maxCoeff());
    }
  }
  report.pass = report.consistencyDefect == 0.0 && report.worstBoundRatio <= 1.0 + tol &&
                report.productDefect <= tol;
  return report;
}

AdjointCalculusReport adjointCalculusRight(const CalculusMap& calculus,
                                           const std::vector<FunctionRule>& catalog, double tol,
                                           std::uint64_t seed) {
  AdjointCalculusReport report;
  report.calculus = calculus.name();
  report.catalogSize = catalog.size();
  const auto dim = static_cast<Eigen::Index>(calculus.dimension());

  // U_f acts on the l^1 model, V_f on the l^inf model.
  auto preAdjoint = [&](const FunctionRule& f) -> Matrix { return calculus.matrix(f).adjoint(); };
  std::vector<Matrix> u;
  for (const auto& f : catalog) u.push_back(preAdjoint(f));

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      const Matrix uFG = preAdjoint(catalog[i] * catalog[j]);
      const Matrix vFG = uFG.adjoint();
      const Matrix vF = u[i].adjoint();
      const Matrix vG = u[j].adjoint();
      report.antiProductDefect = std::max(report.antiProductDefect, (uFG - u[j] * u[i]).cwiseAbs().maxCoeff());
      report.sumDefect = std::max(
          report.sumDefect, (preAdjoint(catalog[i] + catalog[j]) - u[i] - u[j]).cwiseAbs().maxCoeff());
      report.productDefect = std::max(report.productDefect, (vFG - vF * vG).cwiseAbs().maxCoeff());

      const Vector x = randomUnitVector(dim, rng);
      const Vector y = randomUnitVector(dim, rng);
      const Scalar chain[] = {
          y.dot(vFG * x),
          (uFG * y).dot(x),
          (u[j] * (u[i] * y)).dot(x),
          (u[i] * y).dot(vG * x),
          y.dot(vF * (vG * x)),
      };
      // Every link is bounded by ||V_f|| ||V_g|| for unit x, y; defects are
      // reported relative to that scale.
      const double scale = std::max(1.0, uniformBound(vF) * uniformBound(vG));
      for (const auto& link : chain) {
        report.pairingDefect = std::max(report.pairingDefect, std::abs(link - chain[0]) / scale);
      }
    }
  }
  report.pass = report.antiProductDefect <= tol && report.sumDefect <= tol && report.productDefect <= tol &&
                report.pairingDefect <= std::max(tol, 1e-12);
  return report;
}

AdjointCalculusReport adjointCalculusRight(const CompactRealSet& set,
                                           const std::vector<FunctionRule>& catalog, double tol,
                                           std::uint64_t seed) {
  return adjointCalculusRight(diagonalCalculus(set, SpaceTag::lp(1.0, set.size())), catalog, tol, seed);
}

namespace {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Inverse of a unit lower triangular integer matrix by forward substitution.
IntMatrix unitLowerInverse(const IntMatrix& l) {
  const Eigen::Index n = l.rows();
  IntMatrix inv = IntMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = c + 1; r < n; ++r) {
      long long acc = 0;
      for (Eigen::Index k = c; k < r; ++k) acc += l(r, k) * inv(k, c);
      inv(r, c) = -acc;
    }
  }
  return inv;
}

}  // namespace

Matrix randomIdempotent(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (rank > dim) throw InvalidArgument("randomIdempotent: rank exceeds dimension");
  const auto n = static_cast<Eigen::Index>(dim);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-1, 1);
  IntMatrix lower = IntMatrix::Identity(n, n);
  IntMatrix upperT = IntMatrix::Identity(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < r; ++c) {
      lower(r, c) = entry(rng);
      upperT(r, c) = entry(rng);
    }
  }
  const IntMatrix w = lower * upperT.transpose();
  const IntMatrix wInv = unitLowerInverse(upperT).transpose() * unitLowerInverse(lower);
  IntMatrix d = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(rank); ++i) d(i, i) = 1;
  const IntMatrix p = w * d * wInv;
  return p.cast<double>().cast<Scalar>();
}

Matrix randomComplexMatrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) a(r, c) = Scalar(gauss(rng), gauss(rng));
  }
  return a;
}

}  // namespace acfc
