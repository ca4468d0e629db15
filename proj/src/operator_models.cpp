#include "acfc/operator_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "acfc/errors.hpp"

namespace acfc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void requireExponent(double p) {
  if (!(p >= 1.0)) throw InvalidArgument("norm exponent must be >= 1");
}

}  // namespace

SpaceTag SpaceTag::c0(std::size_t dim) { return {SpaceKind::C0, kInf, dim, nullptr}; }

SpaceTag SpaceTag::lp(double p, std::size_t dim) {
  requireExponent(p);
  return {SpaceKind::Lp, p, dim, nullptr};
}

SpaceTag SpaceTag::sup(std::size_t dim) { return {SpaceKind::Sup, kInf, dim, nullptr}; }

SpaceTag SpaceTag::cSigma(const CompactRealSet& set) {
  return {SpaceKind::CSigma, kInf, set.size(), std::make_shared<const CompactRealSet>(set)};
}

double SpaceTag::normExponent() const { return kind == SpaceKind::Lp ? p : kInf; }

std::string SpaceTag::describe() const {
  std::ostringstream os;
  switch (kind) {
    case SpaceKind::C0:
      os << "c0";
      break;
    case SpaceKind::Sup:
      os << "sup";
      break;
    case SpaceKind::CSigma:
      os << "C(" << set->familyDescriptor() << ")";
      break;
    case SpaceKind::Lp:
      os << "l^";
      if (std::isinf(p)) {
        os << "inf";
      } else {
        os << p;
      }
      break;
  }
  os << "[" << dimension << "]";
  return os.str();
}

double conjugateExponent(double p) {
  requireExponent(p);
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

VectorModel::VectorModel(Vector c, SpaceTag s) : coords(std::move(c)), space(std::move(s)) {
  if (static_cast<std::size_t>(coords.size()) != space.dimension) {
    throw InvalidArgument("vector length does not match space dimension");
  }
}

double VectorModel::norm() const { return vectorPNorm(coords, space.normExponent()); }

OperatorModel::OperatorModel(Matrix m, SpaceTag d, SpaceTag c)
    : matrix(std::move(m)), domain(std::move(d)), codomain(std::move(c)) {
  if (static_cast<std::size_t>(matrix.cols()) != domain.dimension ||
      static_cast<std::size_t>(matrix.rows()) != codomain.dimension) {
    throw InvalidArgument("matrix is " + std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + " but tags are " +
                          codomain.describe() + " <- " + domain.describe());
  }
}

OperatorModel::OperatorModel(Matrix m, SpaceTag space) : OperatorModel(std::move(m), space, space) {}

OperatorModel OperatorModel::withTags(SpaceTag d, SpaceTag c) const {
  return OperatorModel(matrix, std::move(d), std::move(c));
}

double maxAbsRowSum(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double maxAbsColSum(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

double uniformBound(const Matrix& a) { return std::max(maxAbsRowSum(a), maxAbsColSum(a)); }

double vectorPNorm(const Vector& x, double p) {
  requireExponent(p);
  if (x.size() == 0) return 0.0;
  if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  // Scale by the largest entry to keep |x_i|^p representable.
  const double scale = x.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i]) / scale, p);
  return scale * std::pow(acc, 1.0 / p);
}

double spectralNorm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::Index row = 0;
  const double largestRow = a.rowwise().norm().maxCoeff(&row);
  if (largestRow == 0.0) return 0.0;

  Vector x = a.row(row).adjoint();
  x /= x.norm();
  double sigma = (a * x).norm();
  constexpr std::size_t kMaxIterations = 100000;
  for (std::size_t it = 0; it < kMaxIterations; ++it) {
    Vector next = a.adjoint() * (a * x);
    const double len = next.norm();
    if (len == 0.0) break;
    x = next / len;
    const double updated = (a * x).norm();
    const bool settled = std::abs(updated - sigma) <= 1e-14 * updated;
    sigma = std::max(sigma, updated);
    if (settled) break;
  }
  return sigma;
}

namespace {

// Normalized dual vector: ||dual||_q = 1 and <dual, v> = ||v||_p.
Vector dualVector(const Vector& v, double p) {
  const double nv = vectorPNorm(v, p);
  Vector w = Vector::Zero(v.size());
  if (nv == 0.0) return w;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag == 0.0) continue;
    w[i] = (v[i] / mag) * std::pow(mag / nv, p - 1.0);
  }
  return w;
}

double ascentFrom(const Matrix& a, Vector x, double p, std::size_t maxIterations) {
  const double q = conjugateExponent(p);
  const double nx = vectorPNorm(x, p);
  if (nx == 0.0) return 0.0;
  x /= nx;
  double best = 0.0;
  for (std::size_t it = 0; it < maxIterations; ++it) {
    const Vector y = a * x;
    const double est = vectorPNorm(y, p) / vectorPNorm(x, p);
    best = std::max(best, est);
    if (est == 0.0) break;
    const Vector z = a.adjoint() * dualVector(y, p);
    const double zq = vectorPNorm(z, q);
    if (zq <= std::real(z.dot(x)) * (1.0 + 1e-13)) break;
    x = dualVector(z, q);
  }
  return best;
}

}  // namespace

double pNormLowerBound(const Matrix& a, double p, const NormOptions& options) {
  requireExponent(p);
  if (a.size() == 0) return 0.0;
  const Eigen::Index n = a.cols();
  double best = ascentFrom(a, Vector::Ones(n), p, options.maxIterations);
  const Eigen::Index unitStarts = std::min<Eigen::Index>(n, 16);
  for (Eigen::Index j = 0; j < unitStarts; ++j) {
    best = std::max(best, ascentFrom(a, Vector::Unit(n, j), p, options.maxIterations));
  }
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  for (std::size_t s = 0; s < options.randomStarts; ++s) {
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = Scalar(gauss(rng), gauss(rng));
    best = std::max(best, ascentFrom(a, x, p, options.maxIterations));
  }
  return best;
}

NormEstimate matrixPNorm(const Matrix& a, double p, const NormOptions& options) {
  requireExponent(p);
  if (p == 1.0) return {maxAbsColSum(a), true};
  if (std::isinf(p)) return {maxAbsRowSum(a), true};
  if (p == 2.0) return {spectralNorm(a), true};
  return {pNormLowerBound(a, p, options), false};
}

NormEstimate operatorNorm(const OperatorModel& a, const NormOptions& options) {
  return matrixPNorm(a.matrix, a.domain.normExponent(), options);
}

OperatorModel multiplicationOperator(const CompactRealSet& set) {
  Vector diag(static_cast<Eigen::Index>(set.size()));
  const auto pts = set.pointsAsDouble();
  for (std::size_t i = 0; i < pts.size(); ++i) diag[static_cast<Eigen::Index>(i)] = pts[i];
  return OperatorModel(diag.asDiagonal().toDenseMatrix(), SpaceTag::cSigma(set));
}

std::pair<OperatorModel, OperatorModel> uIsoC0(std::size_t n) {
  if (n == 0) throw InvalidArgument("uIsoC0: n must be at least 1");
  const auto set = CompactRealSet::sigma0(n);
  const auto dim = static_cast<Eigen::Index>(n + 1);
  const auto zero = static_cast<Eigen::Index>(sigma0ZeroIndex(n));
  Matrix u = Matrix::Zero(dim, dim);
  Matrix uInv = Matrix::Zero(dim, dim);
  u(zero, 0) = 1.0;
  uInv(0, zero) = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto row = static_cast<Eigen::Index>(sigma0Index(n, k));
    const auto col = static_cast<Eigen::Index>(k);
    u(row, 0) = 1.0;
    u(row, col) = 1.0;
    uInv(col, row) = 1.0;
    uInv(col, zero) = -1.0;
  }
  const auto c0 = SpaceTag::c0(n + 1);
  const auto cs = SpaceTag::cSigma(set);
  return {OperatorModel(std::move(u), c0, cs), OperatorModel(std::move(uInv), cs, c0)};
}

Ell1Iso::Ell1Iso(std::size_t n) : n_(n), set_(CompactRealSet::sigma0(n == 0 ? 1 : n)) {
  if (n % 2 != 0 || n < 4) {
    throw InvalidArgument("ell1IsoU: n must be even and at least 4 (got " + std::to_string(n) +
                          ")");
  }
}

Vector Ell1Iso::forward(const BVFunction& g) const {
  if (!(g.set() == set_)) throw SetMismatch("ell1IsoU: function is not on sigma0(n)");
  const std::size_t half = n_ / 2;
  const std::size_t zero = sigma0ZeroIndex(n_);
  auto neg = [&](std::size_t j) { return g.at(sigma0Index(n_, 2 * j - 1)); };
  auto pos = [&](std::size_t j) { return g.at(sigma0Index(n_, 2 * j)); };
  Vector x(static_cast<Eigen::Index>(n_ + 1));
  x[0] = neg(1);
  for (std::size_t j = 1; j < half; ++j) {
    x[static_cast<Eigen::Index>(2 * j)] = neg(j + 1) - neg(j);
    x[static_cast<Eigen::Index>(2 * j - 1)] = pos(j) - pos(j + 1);
  }
  x[static_cast<Eigen::Index>(n_ - 1)] = pos(half) - g.at(zero);
  x[static_cast<Eigen::Index>(n_)] = g.at(zero) - neg(half);
  return x;
}

BVFunction Ell1Iso::inverse(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != n_ + 1) {
    throw InvalidArgument("ell1IsoU: expected " + std::to_string(n_ + 1) + " coordinates");
  }
  const std::size_t half = n_ / 2;
  std::vector<Scalar> values(n_ + 1);
  const Scalar total = x.sum();

  Scalar oddPartial = 0.0;
  for (std::size_t m = 1; m <= half; ++m) {
    oddPartial += x[static_cast<Eigen::Index>(2 * m - 2)];
    values[sigma0Index(n_, 2 * m - 1)] = oddPartial;
  }
  values[sigma0ZeroIndex(n_)] = oddPartial + x[static_cast<Eigen::Index>(n_)];

  Scalar evenPartial = 0.0;
  for (std::size_t m = 1; m <= half; ++m) {
    values[sigma0Index(n_, 2 * m)] = total - evenPartial;
    evenPartial += x[static_cast<Eigen::Index>(2 * m - 1)];
  }
  return BVFunction(set_, std::move(values));
}

OperatorModel Ell1Iso::forwardMatrix() const {
  const auto dim = static_cast<Eigen::Index>(n_ + 1);
  Matrix m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    std::vector<Scalar> basis(n_ + 1, 0.0);
    basis[static_cast<std::size_t>(c)] = 1.0;
    m.col(c) = forward(BVFunction(set_, std::move(basis)));
  }
  return OperatorModel(std::move(m), SpaceTag::cSigma(set_), SpaceTag::lp(1.0, n_ + 1));
}

OperatorModel Ell1Iso::inverseMatrix() const {
  const auto dim = static_cast<Eigen::Index>(n_ + 1);
  Matrix m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto g = inverse(Vector::Unit(dim, c));
    for (Eigen::Index r = 0; r < dim; ++r) m(r, c) = g.at(static_cast<std::size_t>(r));
  }
  return OperatorModel(std::move(m), SpaceTag::lp(1.0, n_ + 1), SpaceTag::cSigma(set_));
}

namespace {

SpaceTag enlarge(const SpaceTag& tag, std::size_t dim, const std::optional<CompactRealSet>& set) {
  switch (tag.kind) {
    case SpaceKind::CSigma:
      if (set && set->size() == dim) return SpaceTag::cSigma(*set);
      return SpaceTag::sup(dim);
    case SpaceKind::C0:
      return SpaceTag::c0(dim);
    case SpaceKind::Lp:
      return SpaceTag::lp(tag.p, dim);
    case SpaceKind::Sup:
      break;
  }
  return SpaceTag::sup(dim);
}

}  // namespace

DirectSumModel directSum(const OperatorModel& a, std::optional<Rational> omega, std::size_t m) {
  DirectSumModel out{a, std::nullopt, static_cast<std::size_t>(a.matrix.cols()), m, Rational(0)};
  const bool onSet = a.domain.kind == SpaceKind::CSigma;
  if (onSet) {
    const auto& sigma = *a.domain.set;
    if (!omega) omega = Rational(1) + sigma.max();
    if (!(*omega > sigma.max())) {
      throw InvalidArgument("directSum: omega = " + omega->toString() +
                            " must exceed max sigma = " + sigma.max().toString());
    }
    out.extendedSet = m == 0 ? sigma : sigma.withPoint(*omega);
  } else if (!omega) {
    throw InvalidArgument("directSum: omega required for operators not on C(sigma)");
  }
  out.omega = *omega;
  if (m == 0) return out;

  const Eigen::Index base = a.matrix.rows();
  const auto dim = static_cast<Eigen::Index>(a.matrix.rows() + static_cast<Eigen::Index>(m));
  Matrix block = Matrix::Zero(dim, dim);
  block.topLeftCorner(base, base) = a.matrix;
  block.bottomRightCorner(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) =
      Matrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) *
      omega->toDouble();
  const auto tag = enlarge(a.domain, static_cast<std::size_t>(dim), out.extendedSet);
  out.op = OperatorModel(std::move(block), tag);
  return out;
}

OperatorModel adjoint(const OperatorModel& a) {
  auto dual = [](const SpaceTag& t) {
    if (t.kind == SpaceKind::Lp && t.p == 1.0) return SpaceTag::sup(t.dimension);
    if (t.kind == SpaceKind::Lp && !std::isinf(t.p)) return SpaceTag::lp(conjugateExponent(t.p), t.dimension);
    return SpaceTag::lp(1.0, t.dimension);
  };
  return OperatorModel(a.matrix.adjoint(), dual(a.codomain), dual(a.domain));
}

}  // namespace acfc
