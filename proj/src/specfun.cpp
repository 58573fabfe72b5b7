#include "ncstat/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ncstat/errors.hpp"

namespace ncstat::specfun {

double jacobi_poly(const JacobiParams& p, double x) {
  const double a = p.alpha;
  const double b = p.beta;
  if (p.degree < 0) throw DomainError("jacobi_poly: negative degree");
  if (!std::isfinite(a) || !std::isfinite(b) || a <= -1.0 || b <= -1.0) {
    throw DomainError("jacobi_poly: indices must be finite and > -1");
  }
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("jacobi_poly: x outside [-1, 1]");

  if (p.degree == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int n = 2; n <= p.degree; ++n) {
    const double nn = n;
    const double s = 2.0 * nn + a + b;
    const double c0 = 2.0 * nn * (nn + a + b) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c2 = 2.0 * (nn + a - 1.0) * (nn + b - 1.0) * s;
    const double next = (c1 * cur - c2 * prev) / c0;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hyp1f1_terminating(const Hyp1F1Terminating& h) {
  if (h.n < 0) throw DomainError("hyp1f1_terminating: n must be >= 0");
  if (!std::isfinite(h.b) || (h.b <= 0.0 && h.b == std::floor(h.b))) {
    throw DomainError("hyp1f1_terminating: b is a non-positive integer");
  }
  // Extended precision absorbs the cancellation of the alternating terms.
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 0; k < h.n; ++k) {
    term *= (static_cast<long double>(k) - h.n) / (h.b + k) * h.y / (k + 1.0L);
    sum += term;
  }
  return static_cast<double>(sum);
}

double gamma_ratio_prefactor(int n, double ell) {
  if (n < 0) throw DomainError("gamma_ratio_prefactor: n must be >= 0");
  if (!(1.5 + ell > 0.0)) throw DomainError("gamma_ratio_prefactor: requires 3/2 + ell > 0");
  double prod = 1.0;
  for (int k = 1; k <= n; ++k) prod *= (ell + 0.5 + k) / k;
  return prod;
}

Rational bernoulli(int k) {
  static const std::array<Rational, kBernoulliMax> table = {
      Rational(1, 6),     Rational(-1, 30),  Rational(1, 42),       Rational(-1, 30),
      Rational(5, 66),    Rational(-691, 2730), Rational(7, 6),     Rational(-3617, 510),
  };
  if (k < 1 || k > kBernoulliMax) {
    throw RangeError("bernoulli: k=" + std::to_string(k) + " outside [1, " +
                     std::to_string(kBernoulliMax) + "]");
  }
  return table[static_cast<std::size_t>(k - 1)];
}

}  // namespace ncstat::specfun
