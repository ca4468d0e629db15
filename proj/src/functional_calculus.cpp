#include "acfc/functional_calculus.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "acfc/catalog.hpp"
#include "acfc/errors.hpp"

namespace acfc {

CalculusMap::CalculusMap(std::string name, SpaceTag space, CompactRealSet spectrum,
                         Evaluator evaluate, Applier apply)
    : name_(std::move(name)),
      space_(std::move(space)),
      spectrum_(std::move(spectrum)),
      evaluate_(std::move(evaluate)),
      apply_(std::move(apply)) {}

OperatorModel CalculusMap::evaluate(const FunctionRule& f) const {
  return OperatorModel(evaluate_(f), space_);
}

Vector CalculusMap::apply(const FunctionRule& f, const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != space_.dimension) {
    throw InvalidArgument(name_ + ": vector length does not match dimension");
  }
  if (apply_) return apply_(f, x);
  return evaluate_(f) * x;
}

namespace {

Vector ruleValues(const FunctionRule& f, const CompactRealSet& set) {
  Vector v(static_cast<Eigen::Index>(set.size()));
  for (std::size_t i = 0; i < set.size(); ++i) v[static_cast<Eigen::Index>(i)] = f(set.points()[i]);
  return v;
}

}  // namespace

CalculusMap diagonalCalculus(const CompactRealSet& set) {
  return diagonalCalculus(set, SpaceTag::cSigma(set));
}

CalculusMap diagonalCalculus(const CompactRealSet& set, SpaceTag space) {
  if (space.dimension != set.size()) throw InvalidArgument("diagonalCalculus: tag dimension mismatch");
  return CalculusMap(
      "diagonal[" + set.familyDescriptor() + "]", std::move(space), set,
      [set](const FunctionRule& f) -> Matrix {
        return ruleValues(f, set).asDiagonal().toDenseMatrix();
      },
      [set](const FunctionRule& f, const Vector& x) -> Vector {
        return ruleValues(f, set).cwiseProduct(x);
      });
}

CalculusMap conjugatedCalculus(const CalculusMap& base, const OperatorModel& iso,
                               const OperatorModel& isoInv) {
  const Eigen::Index n = iso.matrix.cols();
  if (iso.matrix.rows() != static_cast<Eigen::Index>(base.dimension()) ||
      isoInv.matrix.cols() != static_cast<Eigen::Index>(base.dimension()) ||
      isoInv.matrix.rows() != n) {
    throw InvalidArgument("conjugatedCalculus: isomorphism shape does not match the base calculus");
  }
  // Freivalds-style probe keeps the check O(n^2) for large truncations.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double defect = 0.0;
  for (int probe = 0; probe < 3; ++probe) {
    Vector r(n);
    for (Eigen::Index i = 0; i < n; ++i) r[i] = Scalar(coord(rng), coord(rng));
    defect = std::max(defect, (iso.matrix * (isoInv.matrix * r) - r).cwiseAbs().maxCoeff());
    defect = std::max(defect, (isoInv.matrix * (iso.matrix * r) - r).cwiseAbs().maxCoeff());
  }
  if (defect > 1e-12) throw InvalidArgument("conjugatedCalculus: iso and isoInv are not inverse");

  // Shared so that copies of the map do not copy the dense matrices.
  const auto u = std::make_shared<const Matrix>(iso.matrix);
  const auto uInv = std::make_shared<const Matrix>(isoInv.matrix);
  return CalculusMap(
      "conjugated[" + base.name() + "]", iso.domain, base.spectrum(),
      [base, u, uInv](const FunctionRule& f) -> Matrix { return *uInv * base.matrix(f) * *u; },
      [base, u, uInv](const FunctionRule& f, const Vector& x) -> Vector {
        return *uInv * base.apply(f, *u * x);
      });
}

namespace {

CompactRealSet reciprocalSpectrum(std::size_t n) {
  std::vector<Rational> pts{Rational(0)};
  for (std::size_t k = 1; k <= n; ++k) pts.emplace_back(1, static_cast<std::int64_t>(k));
  return CompactRealSet::fromPoints(std::move(pts), {Rational(0)});
}

CalculusMap reciprocalCalculus(std::size_t n, bool useLimit) {
  if (n < 2) throw InvalidArgument("phi calculi need n >= 2");
  const auto dim = static_cast<Eigen::Index>(n + 1);
  return CalculusMap(
      useLimit ? "phi2[" + std::to_string(n) + "]" : "phi1[" + std::to_string(n) + "]",
      SpaceTag::lp(2.0, n + 1), reciprocalSpectrum(n),
      [n, dim, useLimit](const FunctionRule& f) -> Matrix {
        Matrix m = Matrix::Zero(dim, dim);
        m(0, 0) = useLimit ? f.limitAlongReciprocals() : f(Rational(0));
        for (std::size_t k = 1; k <= n; ++k) {
          const auto i = static_cast<Eigen::Index>(k);
          m(i, i) = f(Rational(1, static_cast<std::int64_t>(k)));
        }
        return m;
      });
}

}  // namespace

CalculusMap phi1(std::size_t n) { return reciprocalCalculus(n, false); }

CalculusMap phi2(std::size_t n) { return reciprocalCalculus(n, true); }

CalculusMap directSumCalculus(const CalculusMap& base, const Rational& omega, std::size_t m) {
  const auto& sigma = base.spectrum();
  if (!(omega > sigma.max())) throw InvalidArgument("directSumCalculus: omega must exceed max sigma");
  const auto baseDim = static_cast<Eigen::Index>(base.dimension());
  const auto dim = baseDim + static_cast<Eigen::Index>(m);
  auto extended = m == 0 ? sigma : sigma.withPoint(omega);
  SpaceTag tag = (base.space().kind == SpaceKind::CSigma && m == 1)
                     ? SpaceTag::cSigma(extended)
                     : (base.space().kind == SpaceKind::Lp ? SpaceTag::lp(base.space().p, static_cast<std::size_t>(dim))
                                                           : SpaceTag::sup(static_cast<std::size_t>(dim)));
  return CalculusMap(
      "directSum[" + base.name() + "," + omega.toString() + "," + std::to_string(m) + "]",
      std::move(tag), std::move(extended),
      [base, omega, baseDim, dim](const FunctionRule& f) -> Matrix {
        Matrix out = Matrix::Zero(dim, dim);
        out.topLeftCorner(baseDim, baseDim) = base.matrix(f);
        const Scalar fw = f(omega);
        for (Eigen::Index i = baseDim; i < dim; ++i) out(i, i) = fw;
        return out;
      });
}

CalculusMap idempotentCalculus(const Matrix& p, SpaceTag space) {
  if (p.rows() != p.cols() || static_cast<std::size_t>(p.rows()) != space.dimension) {
    throw InvalidArgument("idempotentCalculus: P must be square and match the tag");
  }
  if ((p * p - p).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, p.cwiseAbs().maxCoeff())) {
    throw InvalidArgument("idempotentCalculus: P is not idempotent");
  }
  const Eigen::Index n = p.rows();
  return CalculusMap(
      "idempotent[" + std::to_string(n) + "]", std::move(space),
      CompactRealSet::fromPoints({Rational(0), Rational(1)}),
      [p, n](const FunctionRule& f) -> Matrix {
        const Matrix id = Matrix::Identity(n, n);
        return f(Rational(0)) * (id - p) + f(Rational(1)) * p;
      });
}

HomomorphismReport homomorphismCheck(const CalculusMap& c, const std::vector<FunctionRule>& catalog,
                                     double tol) {
  HomomorphismReport report;
  report.calculus = c.name();
  report.catalogSize = catalog.size();
  report.tol = tol;

  const auto n = static_cast<Eigen::Index>(c.dimension());
  report.unitDefect = (c.matrix(FunctionRule::constant(1.0)) - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  report.worstDefect = report.unitDefect;
  report.worstLaw = "unit";
  report.witness = {"one", "one"};

  std::vector<Matrix> images;
  images.reserve(catalog.size());
  for (const auto& f : catalog) images.push_back(c.matrix(f));

  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      const double product = uniformBound(c.matrix(catalog[i] * catalog[j]) - images[i] * images[j]);
      const double sum = uniformBound(c.matrix(catalog[i] + catalog[j]) - images[i] - images[j]);
      for (auto [defect, law] : {std::pair{product, "product"}, std::pair{sum, "sum"}}) {
        if (defect > report.worstDefect) {
          report.worstDefect = defect;
          report.worstLaw = law;
          report.witness = {catalog[i].id(), catalog[j].id()};
        }
      }
    }
  }
  report.pass = report.worstDefect <= tol;
  return report;
}

BoundReport calculusBound(const CalculusMap& c, const std::vector<FunctionRule>& catalog,
                          BoundNorm norm, const NormOptions& options) {
  if (catalog.empty()) throw InvalidArgument("calculusBound: empty catalog");
  const auto rules = norm == BoundNorm::ACProxy ? continuousPart(catalog, c.spectrum()) : catalog;
  if (rules.empty()) throw InvalidArgument("calculusBound: no catalog rule is continuous on the spectrum");

  BoundReport report;
  report.calculus = c.name();
  report.catalogSize = catalog.size();
  for (const auto& f : rules) {
    const double denom = bvNorm(restrict(f, c.spectrum()));
    if (denom == 0.0) continue;
    const auto est = operatorNorm(c.evaluate(f), options);
    report.allExact = report.allExact && est.exact;
    ++report.rulesUsed;
    const double ratio = est.value / denom;
    if (report.rulesUsed == 1 || ratio > report.bound) {
      report.bound = ratio;
      report.witness = f.id();
    }
  }
  return report;
}

}  // namespace acfc
