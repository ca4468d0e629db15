#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acfc/rational.hpp"

namespace acfc {

using Scalar = std::complex<double>;

/// Closed-form scalar function on the real line.
///
/// A rule is an immutable expression tree over a small catalog of leaves
/// (polynomials, interval indicators, point indicators) closed under sums,
/// products and scalar multiples. Catalog rules know their one-sided limits
/// exactly, which is what separates the calculi that differ only at a
/// limit point. A `custom` leaf wraps an arbitrary callable and has no exact
/// limits.
class FunctionRule {
 public:
  /// Coefficients in ascending order: c0 + c1 t + c2 t^2 + ...
  static FunctionRule polynomial(std::vector<Scalar> ascending);
  static FunctionRule constant(Scalar c);
  static FunctionRule identity();

  /// Indicator of an interval; a missing endpoint means unbounded on that side.
  static FunctionRule interval(std::optional<Rational> lo, bool loClosed,
                               std::optional<Rational> hi, bool hiClosed);
  static FunctionRule atMost(Rational a) { return interval(std::nullopt, false, a, true); }
  static FunctionRule below(Rational a) { return interval(std::nullopt, false, a, false); }
  static FunctionRule atLeast(Rational a) { return interval(a, true, std::nullopt, false); }
  static FunctionRule above(Rational a) { return interval(a, false, std::nullopt, false); }
  static FunctionRule point(Rational a);

  static FunctionRule custom(std::string name, std::function<Scalar(const Rational&)> fn);

  Scalar operator()(const Rational& t) const;

  /// Exact limit of f(s) as s decreases to t. Throws UnsupportedRule for
  /// custom leaves.
  Scalar limitFromRight(const Rational& t) const;
  /// Exact limit of f(s) as s increases to t.
  Scalar limitFromLeft(const Rational& t) const;
  /// lim f(1/k) as k -> infinity.
  Scalar limitAlongReciprocals() const { return limitFromRight(Rational(0)); }

  bool hasExactLimits() const;

  /// Stable identifier; catalog leaves carry their registry id, composites a
  /// parenthesized expression.
  const std::string& id() const;
  FunctionRule withId(std::string id) const;

  friend FunctionRule operator+(const FunctionRule& f, const FunctionRule& g);
  friend FunctionRule operator*(const FunctionRule& f, const FunctionRule& g);
  friend FunctionRule operator*(Scalar c, const FunctionRule& f);

  struct Node;

 private:
  explicit FunctionRule(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace acfc
