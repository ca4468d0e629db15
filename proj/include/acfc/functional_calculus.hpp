#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "acfc/function_rule.hpp"
#include "acfc/operator_models.hpp"
#include "acfc/sets_functions.hpp"

namespace acfc {

/// An assignment f -> f(T) for one operator model.
///
/// `evaluate` produces the matrix of f(T) on `space`; `apply` computes
/// f(T)x and may avoid forming the matrix. The spectrum set is what BV norms
/// of catalog rules are measured on.
class CalculusMap {
 public:
  using Evaluator = std::function<Matrix(const FunctionRule&)>;
  using Applier = std::function<Vector(const FunctionRule&, const Vector&)>;

  CalculusMap(std::string name, SpaceTag space, CompactRealSet spectrum, Evaluator evaluate,
              Applier apply = nullptr);

  const std::string& name() const { return name_; }
  const SpaceTag& space() const { return space_; }
  const CompactRealSet& spectrum() const { return spectrum_; }
  std::size_t dimension() const { return space_.dimension; }

  OperatorModel evaluate(const FunctionRule& f) const;
  Matrix matrix(const FunctionRule& f) const { return evaluate_(f); }
  Vector apply(const FunctionRule& f, const Vector& x) const;
  /// The calculus at the identity function, i.e. the generating operator.
  OperatorModel generator() const { return evaluate(FunctionRule::identity()); }

 private:
  std::string name_;
  SpaceTag space_;
  CompactRealSet spectrum_;
  Evaluator evaluate_;
  Applier apply_;
};

/// f(T) = diag(f(t_1), ..., f(t_k)). The tag defaults to C(set).
CalculusMap diagonalCalculus(const CompactRealSet& set);
CalculusMap diagonalCalculus(const CompactRealSet& set, SpaceTag space);

/// f(T) = isoInv * base(f) * iso. Throws InvalidArgument unless
/// iso * isoInv and isoInv * iso are the identity (to 1e-12).
CalculusMap conjugatedCalculus(const CalculusMap& base, const OperatorModel& iso,
                               const OperatorModel& isoInv);

/// Calculi for T(x0, x1, x2, ...) = (0, x1, x2/2, x3/3, ...) on l2 of
/// dimension n + 1: both are diag(., f(1), f(1/2), ..., f(1/n)); phi1 puts
/// f(0) in the first slot and phi2 puts lim f(1/k).
CalculusMap phi1(std::size_t n);
CalculusMap phi2(std::size_t n);

/// f(T') = base(f) (+) f(omega) I_m on the set base.spectrum u {omega}.
CalculusMap directSumCalculus(const CalculusMap& base, const Rational& omega, std::size_t m);

/// f(P) = f(0)(I - P) + f(1)P for an idempotent P, spectrum {0, 1}.
CalculusMap idempotentCalculus(const Matrix& p, SpaceTag space);

struct HomomorphismReport {
  std::string calculus;
  double worstDefect = 0.0;
  /// "product", "sum" or "unit"
  std::string worstLaw;
  std::pair<std::string, std::string> witness;
  double unitDefect = 0.0;
  std::size_t catalogSize = 0;
  double tol = 0.0;
  bool pass = false;
};

/// Checks c(fg) = c(f)c(g), c(f+g) = c(f)+c(g) over all ordered catalog pairs
/// and c(1) = I. Defects are measured in max(||.||_1, ||.||_inf).
HomomorphismReport homomorphismCheck(const CalculusMap& c, const std::vector<FunctionRule>& catalog,
                                     double tol);

enum class BoundNorm { BV, ACProxy };

struct BoundReport {
  std::string calculus;
  double bound = 0.0;
  std::string witness;
  std::size_t catalogSize = 0;
  std::size_t rulesUsed = 0;
  bool allExact = true;
};

/// sup over catalog of ||c(f)|| / norm(f), a lower bound for the calculus
/// norm. ACProxy uses the BV norm on the rules continuous at every limit
/// marker of the spectrum.
BoundReport calculusBound(const CalculusMap& c, const std::vector<FunctionRule>& catalog,
                          BoundNorm norm, const NormOptions& options = {});

}  // namespace acfc
