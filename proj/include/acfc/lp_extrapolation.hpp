#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "acfc/function_rule.hpp"
#include "acfc/functional_calculus.hpp"
#include "acfc/operator_models.hpp"

namespace acfc {

struct PNormSample {
  double p = 1.0;
  double value = 0.0;
  bool exact = true;
};

/// One matrix viewed on every l^p in a range; the table holds ||A||_p.
struct PScaleFamily {
  Matrix matrix;
  double r = 1.0;
  double s = std::numeric_limits<double>::infinity();
  std::vector<PNormSample> normTable;
};

std::vector<PNormSample> pNormProfile(const Matrix& a, const std::vector<double>& ps,
                                      const NormOptions& options = {});

PScaleFamily makePScaleFamily(const Matrix& a, double r, double s, const std::vector<double>& ps,
                              const NormOptions& options = {});

struct RieszThorinReport {
  double p0 = 1.0;
  double p1 = 1.0;
  double theta = 0.0;
  double pTheta = 1.0;
  double lhs = 0.0;
  bool lhsExact = true;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
};

/// ||A||_{p_theta} <= ||A||_{p0}^{1-theta} ||A||_{p1}^theta + tol with
/// 1/p_theta = (1-theta)/p0 + theta/p1. Endpoints must be 1, 2 or infinity.
RieszThorinReport rieszThorinCheck(const Matrix& a, double p0, double p1, double theta, double tol,
                                   const NormOptions& options = {});

struct DualityReport {
  std::size_t trials = 0;
  double worstDefect = 0.0;
  bool pass = false;
};

/// With V = (A^*)^*: <y, Vx> = <A^* y, x> = <y, Ax> for random x, y, using
/// the pairing <u, v> = sum conj(u_i) v_i.
DualityReport dualityIdentityCheck(const Matrix& a, std::size_t trials, std::uint64_t seed, double tol);

struct ExtensionReport {
  std::string calculus;
  std::vector<double> ps;
  double consistencyDefect = 0.0;
  double worstBoundRatio = 0.0;
  double productDefect = 0.0;
  std::size_t catalogSize = 0;
  bool allNormsExact = true;
  bool pass = false;
};

/// Psi_p(f) = diag(f(t_i)) on l^p for each sampled p. Checks the action is
/// independent of p, sup_p ||Psi_p(f)||_p <= bvNorm(f) (M = 1 for diagonal
/// models), and Psi(fg) = Psi(f)Psi(g) on the smallest-p endpoint model.
ExtensionReport extendCalculusLeft(const CompactRealSet& set, const std::vector<FunctionRule>& catalog,
                                   const std::vector<double>& ps, double tol, std::uint64_t seed = 0);

struct AdjointCalculusReport {
  std::string calculus;
  double antiProductDefect = 0.0;
  double sumDefect = 0.0;
  double productDefect = 0.0;
  /// Relative to max(1, ||V_f|| ||V_g||) in the uniform bound.
  double pairingDefect = 0.0;
  std::size_t catalogSize = 0;
  bool pass = false;
};

/// U_f = Psi(f)^* on l^1 and V_f = (U_f)^* on l^inf. Checks U_{fg} = U_g U_f,
/// U_{f+g} = U_f + U_g, V_{fg} = V_f V_g and the pairing chain
/// <y, V_fg x> = <U_fg y, x> = <U_g U_f y, x> = <U_f y, V_g x> = <y, V_f V_g x>.
AdjointCalculusReport adjointCalculusRight(const CalculusMap& calculus,
                                           const std::vector<FunctionRule>& catalog, double tol,
                                           std::uint64_t seed = 0);
AdjointCalculusReport adjointCalculusRight(const CompactRealSet& set,
                                           const std::vector<FunctionRule>& catalog, double tol,
                                           std::uint64_t seed = 0);

/// P = W diag(1,..,1,0,..,0) W^-1 with W a product of unit triangular
/// integer matrices, so P and W^-1 are integer and exactly representable.
Matrix randomIdempotent(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Dense complex matrix with standard normal real and imaginary parts.
Matrix randomComplexMatrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace acfc
