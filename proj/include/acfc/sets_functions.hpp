#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acfc/function_rule.hpp"
#include "acfc/rational.hpp"

namespace acfc {

enum class SetFamily { GenericFinite, Sigma0Truncation, IntervalGrid };

/// Finite model of a compact subset of the real line.
///
/// Points are exact rationals in strictly increasing order. Limit markers flag
/// the points that are accumulation points of the set being truncated (0 for
/// the sigma0 family).
class CompactRealSet {
 public:
  /// {(-1)^k / k : 1 <= k <= n} together with the limit point 0.
  static CompactRealSet sigma0(std::size_t n);
  /// n equally spaced points from a to b inclusive (n >= 2, a < b), or {a}
  /// when n = 1.
  static CompactRealSet intervalGrid(Rational a, Rational b, std::size_t n);
  /// Arbitrary points; sorted on construction, duplicates rejected.
  static CompactRealSet fromPoints(std::vector<Rational> points,
                                   std::vector<Rational> limitMarkers = {});

  std::size_t size() const { return points_.size(); }
  const std::vector<Rational>& points() const { return points_; }
  const std::vector<Rational>& limitMarkers() const { return limitMarkers_; }
  std::vector<double> pointsAsDouble() const;

  const Rational& min() const { return points_.front(); }
  const Rational& max() const { return points_.back(); }

  std::optional<std::size_t> indexOf(const Rational& t) const;
  bool contains(const Rational& t) const { return indexOf(t).has_value(); }
  bool isLimitMarker(const Rational& t) const;

  SetFamily family() const { return family_; }
  /// Truncation or grid parameter n; 0 for generic sets.
  std::size_t familyParameter() const { return familyN_; }
  /// Human readable family descriptor, e.g. "sigma0-truncation(4)".
  std::string familyDescriptor() const;

  /// Same points plus `extra`, keeping limit markers. Result is generic.
  CompactRealSet withPoint(const Rational& extra) const;

  friend bool operator==(const CompactRealSet& a, const CompactRealSet& b) {
    return a.points_ == b.points_ && a.limitMarkers_ == b.limitMarkers_;
  }

 private:
  CompactRealSet() = default;

  std::vector<Rational> points_;
  std::vector<Rational> limitMarkers_;
  SetFamily family_ = SetFamily::GenericFinite;
  std::size_t familyN_ = 0;
  Rational gridA_;
  Rational gridB_;
};

/// Position of (-1)^k / k inside sigma0(n), 1 <= k <= n.
std::size_t sigma0Index(std::size_t n, std::size_t k);
/// Position of the limit point 0 inside sigma0(n).
std::size_t sigma0ZeroIndex(std::size_t n);

/// A function restricted to a CompactRealSet.
class BVFunction {
 public:
  BVFunction(CompactRealSet set, std::vector<Scalar> values,
             std::optional<FunctionRule> sourceRule = std::nullopt);

  const CompactRealSet& set() const { return set_; }
  const std::vector<Scalar>& values() const { return values_; }
  const std::optional<FunctionRule>& sourceRule() const { return sourceRule_; }

  Scalar at(std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  CompactRealSet set_;
  std::vector<Scalar> values_;
  std::optional<FunctionRule> sourceRule_;
};

BVFunction restrict(const FunctionRule& rule, const CompactRealSet& set);

/// Sum of |f(t_{i+1}) - f(t_i)| over consecutive points.
double variation(const BVFunction& f);
double supNorm(const BVFunction& f);
/// ||f||_inf + var(f).
double bvNorm(const BVFunction& f);

BVFunction add(const BVFunction& f, const BVFunction& g);
BVFunction mul(const BVFunction& f, const BVFunction& g);
BVFunction scale(Scalar c, const BVFunction& f);

/// f(t) = 0 for every point t <= lambda.
bool vanishesAtOrBelow(const BVFunction& f, const Rational& lambda);
/// f(t) = 0 for every point t >= lambda.
bool vanishesAtOrAbove(const BVFunction& f, const Rational& lambda);

struct ContinuityReport {
  bool continuous = false;
  double defect = 0.0;
  Rational worstPoint;
  std::size_t samples = 0;
};

/// Tests a rule for continuity at 0 along sigma0(n): compares the rule at the
/// m points of each sign nearest 0 with its value at 0.
ContinuityReport isContinuousAtLimit(const FunctionRule& rule, std::size_t n, std::size_t m,
                                     double tol);

/// Exact version used for AC membership of catalog rules: value, left limit
/// and right limit agree at every limit marker of the set.
bool isContinuousAtMarkers(const FunctionRule& rule, const CompactRealSet& set);

}  // namespace acfc
