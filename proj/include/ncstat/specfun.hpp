#pragma once

// Special functions needed by the spectra and wavefunctions: Jacobi
// polynomials, terminating confluent hypergeometric series, the Gamma-ratio
// normalisation of the radial factor, and even-index Bernoulli numbers.

#include <cstdint>

#include <boost/rational.hpp>

namespace ncstat::specfun {

using Rational = boost::rational<std::int64_t>;

struct JacobiParams {
  int degree = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// P_s^{(alpha,beta)}(x) by the three-term recurrence in the degree.
/// Requires degree >= 0, alpha, beta > -1 and x in [-1, 1].
double jacobi_poly(const JacobiParams& p, double x);

/// 1F1(-n; b; y), the finite sum of n+1 Pochhammer terms.
struct Hyp1F1Terminating {
  int n = 0;
  double b = 1.0;
  double y = 0.0;
};

double hyp1f1_terminating(const Hyp1F1Terminating& h);

/// Gamma(n + 3/2 + ell) / (n! Gamma(3/2 + ell)) as the product
/// prod_{k=1..n} (ell + 1/2 + k) / k. Requires 3/2 + ell > 0.
double gamma_ratio_prefactor(int n, double ell);

/// Largest k for which bernoulli(k) = B_{2k} is tabulated.
inline constexpr int kBernoulliMax = 8;

/// B_{2k} for 1 <= k <= kBernoulliMax, exact.
Rational bernoulli(int k);

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

}  // namespace ncstat::specfun
