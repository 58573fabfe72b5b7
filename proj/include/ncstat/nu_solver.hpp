#pragma once

// Parametric Nikiforov-Uvarov machinery for the template equation
//
//   F'' + (b1 - b2 y) / (y (1 - b3 y)) F' - (x1 y^2 - x2 y + x3) / [y (1 - b3 y)]^2 F = 0
//
// derive() produces the auxiliary parameters beta4..beta13; the quantization
// residuals and wavefunction factors are built from them.

#include <functional>
#include <optional>
#include <utility>

#include "ncstat/specfun.hpp"

namespace ncstat::nu {

struct NUProblem {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
};

/// beta10..beta13 of one sign choice for sqrt(beta8).
struct BranchParams {
  double beta10 = 0.0;
  double beta11 = 0.0;
  double beta12 = 0.0;
  double beta13 = 0.0;
};

struct NUDerived {
  double beta4 = 0.0;
  double beta5 = 0.0;
  double beta6 = 0.0;
  double beta7 = 0.0;
  double beta8 = 0.0;  // raw, may be negative
  double beta9 = 0.0;  // raw, may be negative
  // Present only when beta8 >= 0 and beta9 >= 0.
  std::optional<BranchParams> standard;
  std::optional<BranchParams> starred;
};

enum class QuantizationMode {
  standard,    // beta2 s - (2s+1) beta5 + ... + 2 sqrt(beta8 beta9) = 0
  beta3_zero,  // beta2 s + (1-2s) beta5 + ... - 2 sqrt(beta8 beta9) = 0
};

NUDerived derive(const NUProblem& p);

/// Left-hand side of the selected quantization rule at polynomial degree s.
/// Throws BranchError when beta8 or beta9 is negative. The beta3_zero mode is
/// accepted when beta3 == 0, or when beta8 == 0 (where the two rules are both
/// candidates); otherwise it throws UsageError.
double quantization_residual(const NUDerived& d, const NUProblem& p, int s, QuantizationMode mode);

/// Both residuals evaluated literally, regardless of beta3.
/// first = standard rule, second = beta3_zero rule.
std::pair<double, double> residuals_both(const NUDerived& d, const NUProblem& p, int s);

/// y -> offset + slope * y
struct AffineMap {
  double offset = 0.0;
  double slope = 1.0;
  double operator()(double y) const { return offset + slope * y; }
};

/// F(y) ~ y^exponent1 (1 - beta3 y)^exponent2 P_s^{(a,b)}(argument(y))
struct WavefunctionFactors {
  double exponent1 = 0.0;
  double exponent2 = 0.0;
  specfun::JacobiParams jacobi;
  AffineMap argument;
  double beta3 = 0.0;

  double evaluate(double y) const;
};

/// Factor parameters of the polynomial solution at degree s. The second
/// Jacobi index of the beta3_zero branch uses the unstarred beta10, as
/// printed in the source formula. Throws BranchError when beta3 == 0 (the
/// ratio beta13/beta3 is undefined) or when the square roots are unavailable.
WavefunctionFactors wavefunction_factors(const NUDerived& d, const NUProblem& p, int s,
                                         QuantizationMode mode);

struct RootOptions {
  double residual_tol = 1e-12;
  int max_iterations = 400;
};

/// Root of f starting from [lo, hi]. The bracket is widened by doubling until
/// the signs differ; points where f throws BranchError or returns NaN are
/// treated as outside the domain and the widening step is halved there.
/// Refinement is bisection with secant steps taken when they fall inside the
/// bracket. Throws DomainError if no sign change is found.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const RootOptions& opt = {});

/// Solve quantization_residual(derive(build(u)), build(u), s, mode) = 0 for
/// the unknown u embedded in the problem coefficients.
double solve_quantization(const std::function<NUProblem(double)>& build, int s,
                          QuantizationMode mode, double lo, double hi,
                          const RootOptions& opt = {});

}  // namespace ncstat::nu
