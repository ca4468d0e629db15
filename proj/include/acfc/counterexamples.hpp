#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acfc/function_rule.hpp"
#include "acfc/functional_calculus.hpp"
#include "acfc/operator_models.hpp"
#include "acfc/sets_functions.hpp"

namespace acfc {

/// (head_0, ..., head_{m-1}, tail, tail, ...): a convergent sequence with m
/// explicit coordinates. The limit functional returns `tail`.
struct ConvergentSeqModel {
  Vector head;
  Scalar tail = 0.0;

  Scalar limit() const { return tail; }
  double supNorm() const;
  /// (head, tail) as one vector of length m + 1.
  Vector coords() const;
  static ConvergentSeqModel fromCoords(const Vector& coords);
  static ConvergentSeqModel constant(std::size_t m, Scalar c);
};

/// Tx = (Lx, 0, 0, ...) on the convergent-sequence model with head length m.
OperatorModel limitToFirstOperator(std::size_t m);
/// Sx = (Lx, Lx, Lx, ...).
OperatorModel limitToConstantOperator(std::size_t m);

struct RangeInclusionReport {
  Rational lambda;
  std::size_t leftRulesChecked = 0;
  std::size_t rightRulesChecked = 0;
  double worstDefect = 0.0;
  std::string witness;
  bool pass = false;
};

/// With P = diag(chi_{(-inf, lambda]}) (or `projectionOverride`) and Q = I - P:
/// f(T)P = 0 for catalog f vanishing on sigma n (-inf, lambda], and f(T)Q = 0
/// for catalog f vanishing on sigma n [lambda, inf). Exact comparison.
RangeInclusionReport rangeInclusionCheck(const CompactRealSet& set, const Rational& lambda,
                                         const std::vector<FunctionRule>& catalog,
                                         const std::optional<Matrix>& projectionOverride = std::nullopt);

/// Rules whose diagonal calculus annihilates the nonnegative (resp.
/// nonpositive) part of sigma0(n): point indicators at single positive points
/// plus the ramp t * chi_(0, inf), and the mirror family.
std::vector<FunctionRule> leftAnnihilatorCatalog(std::size_t n);
std::vector<FunctionRule> rightAnnihilatorCatalog(std::size_t n);

struct FeasibilityResult {
  double maxAbsAtZero = 0.0;
  Vector witness;
  bool feasible = true;
};

struct ObstructionReport {
  std::size_t n = 0;
  double epsilon = 0.0;
  std::size_t tailWindow = 0;
  std::string rule;
  /// max |(f(T)e0)_k| over the 2K coordinates nearest the limit point.
  double tailDefect = 0.0;
  std::size_t tailWitnessIndex = 0;
  /// max |x(0)| over unit-sup x with f(T)x = 0 for the annihilator catalog and
  /// |x(t) - x(0)| <= eps at the K points of each sign nearest 0.
  double constraintDefectLeft = 0.0;
  double constraintDefectRight = 0.0;
  double constraintDefect = 0.0;
  bool feasible = true;
  std::string message;
};

/// Quantifies the c0 obstruction at truncation n with window K (K < n/2):
/// (a) tail of f(T)e0 in c0 coordinates for the conjugated calculus,
/// (b) how large x(0) can be for vectors forced into the ranges of P and Q.
ObstructionReport c0ObstructionDemo(std::size_t n, double epsilon, std::size_t window);
ObstructionReport c0ObstructionDemo(std::size_t n, double epsilon, std::size_t window,
                                    const FunctionRule& rule);

struct Ell1IsoReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  double worstForwardRatio = 0.0;
  double worstInverseRatio = 0.0;
  double worstFunctionRoundTrip = 0.0;
  double worstVectorRoundTrip = 0.0;
  std::string worstForwardRule;
  bool pass = false;
};

/// Random functions g (from catalog combinations) and random coordinate
/// vectors x: ||U g||_1 <= bvNorm(g), bvNorm(U^-1 x) <= 2 ||x||_1, round trips.
Ell1IsoReport ell1IsoDemo(std::size_t n, std::size_t trials, std::uint64_t seed);

struct BanachLimitReport {
  std::size_t m = 0;
  double tSquaredDefect = 0.0;
  bool tNonzero = false;
  double tNorm = 0.0;
  double sIdempotentDefect = 0.0;
  bool sKillsFinitelySupported = false;
  double sFixesConstant = 0.0;
  double finiteCalculusDefect = 0.0;
  double fullCalculusDefect = 0.0;
  /// chi_{1} applied to the constant sequence 1 under both calculi.
  double disagreementFull = 0.0;
  double disagreementFinite = 0.0;
  bool pass = false;
};

BanachLimitReport banachLimitDemo(std::size_t m);

}  // namespace acfc
