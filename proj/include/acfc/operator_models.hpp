#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "acfc/sets_functions.hpp"

namespace acfc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class SpaceKind { C0, Lp, Sup, CSigma };

/// Which finite-dimensional model space a vector or operator lives on.
struct SpaceTag {
  SpaceKind kind = SpaceKind::Sup;
  /// Exponent for Lp; infinity is allowed and normed like Sup.
  double p = std::numeric_limits<double>::infinity();
  std::size_t dimension = 0;
  /// Present exactly when kind == CSigma.
  std::shared_ptr<const CompactRealSet> set;

  static SpaceTag c0(std::size_t dim);
  static SpaceTag lp(double p, std::size_t dim);
  static SpaceTag sup(std::size_t dim);
  static SpaceTag cSigma(const CompactRealSet& set);

  /// Exponent of the norm this tag uses (infinity for sup-type tags).
  double normExponent() const;
  std::string describe() const;
};

/// 1/p + 1/q = 1, with 1 <-> infinity.
double conjugateExponent(double p);

struct VectorModel {
  Vector coords;
  SpaceTag space;

  VectorModel(Vector coords, SpaceTag space);
  double norm() const;
};

/// Dense matrix acting codomain <- domain.
struct OperatorModel {
  Matrix matrix;
  SpaceTag domain;
  SpaceTag codomain;

  OperatorModel(Matrix matrix, SpaceTag domain, SpaceTag codomain);
  /// Endomorphism of one space.
  OperatorModel(Matrix matrix, SpaceTag space);

  OperatorModel withTags(SpaceTag domain, SpaceTag codomain) const;
};

struct NormEstimate {
  double value = 0.0;
  /// False when `value` is a lower bound from the p-norm ascent.
  bool exact = true;
};

struct NormOptions {
  std::uint64_t seed = 0;
  std::size_t randomStarts = 8;
  std::size_t maxIterations = 200;
};

double maxAbsRowSum(const Matrix& a);
double maxAbsColSum(const Matrix& a);
/// Largest singular value by power iteration on A^H A (relative tolerance 1e-10).
double spectralNorm(const Matrix& a);
/// max ||Ax||_p / ||x||_p found by multi-start ascent (Boyd's iteration).
/// Every reported value is attained by an explicit vector, so it never
/// exceeds the true norm beyond rounding.
double pNormLowerBound(const Matrix& a, double p, const NormOptions& options = {});
double vectorPNorm(const Vector& x, double p);

/// ||A||_p, exact for p in {1, 2, inf}, a flagged lower bound otherwise.
NormEstimate matrixPNorm(const Matrix& a, double p, const NormOptions& options = {});

/// Norm of the operator on its domain tag (the codomain is assumed to carry
/// the same norm type).
NormEstimate operatorNorm(const OperatorModel& a, const NormOptions& options = {});

/// max(||A||_1, ||A||_inf); bounds ||A||_p for every p.
double uniformBound(const Matrix& a);

/// Tx(t) = t x(t) on C(set).
OperatorModel multiplicationOperator(const CompactRealSet& set);

/// U : c0 -> C(sigma0(n)), (Ux)(0) = x0, (Ux)((-1)^k/k) = x0 + xk, with its
/// inverse. Values on C(sigma0(n)) are indexed by sorted points.
std::pair<OperatorModel, OperatorModel> uIsoC0(std::size_t n);

/// l1 <-> AC(sigma0) isomorphism truncated to sigma0(n), n even and >= 4.
///
/// Coordinate j (0-based) corresponds to x_{j+1}:
///   x_1 = g(-1),
///   x_{2j+1} = g(-1/(2j+1)) - g(-1/(2j-1))   for 1 <= j < n/2,
///   x_{2j}   = g(1/(2j)) - g(1/(2j+2))        for 1 <= j < n/2,
///   x_n      = g(1/n) - g(0),
///   x_{n+1}  = g(0) - g(-1/(n-1)).
/// The last two coordinates close the two difference chains at the limit
/// point, so the truncation has n + 1 coordinates for n + 1 points.
class Ell1Iso {
 public:
  explicit Ell1Iso(std::size_t n);

  std::size_t n() const { return n_; }
  const CompactRealSet& set() const { return set_; }

  Vector forward(const BVFunction& g) const;
  /// Partial sums: g(-1/(2m-1)) = sum_{j<=m} x_{2j-1}, g(0) = sum of odd
  /// coordinates, g(1/(2m)) = sum of all coordinates - sum_{j<m} x_{2j}.
  BVFunction inverse(const Vector& x) const;

  OperatorModel forwardMatrix() const;
  OperatorModel inverseMatrix() const;

 private:
  std::size_t n_;
  CompactRealSet set_;
};

inline Ell1Iso ell1IsoU(std::size_t n) { return Ell1Iso(n); }

/// Result of T' = T (+) omega I_m on the enlarged set sigma' = sigma u {omega}.
struct DirectSumModel {
  OperatorModel op;
  std::optional<CompactRealSet> extendedSet;
  std::size_t baseDimension = 0;
  std::size_t summandDimension = 0;
  Rational omega;
};

/// Block diagonal [A 0; 0 omega I_m]. When A lives on C(sigma), omega must
/// exceed max sigma and defaults to 1 + max sigma.
DirectSumModel directSum(const OperatorModel& a, std::optional<Rational> omega, std::size_t m);

/// Conjugate transpose; lp(p) tags become lp(p'), sup-type tags become lp(1)
/// and lp(1) becomes sup.
OperatorModel adjoint(const OperatorModel& a);

}  // namespace acfc
