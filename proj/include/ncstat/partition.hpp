#pragma once

// Canonical partition function of the oscillator-like spectrum with the
// ground-state energy subtracted, in the dimensionless temperature
// alpha_bar = 1/(beta xi):
//
//   three_d:  Z = sum_{n'>=0} (1 + n')^2 exp(-2 n' / alpha_bar)
//   one_d:    Z = sum_{N>=0} exp(-N / alpha_bar)
//
// evaluated by certified direct summation, by the k = 2 Euler-Maclaurin
// closed forms, or by the generic Euler-Maclaurin engine.

#include <functional>
#include <string_view>

namespace ncstat::partition {

enum class Mode { three_d, one_d };
enum class Method { direct, euler_maclaurin, closed_form_exact };
enum class OneDVariant { derived, paper_literal };

std::string_view to_string(Mode m);
std::string_view to_string(Method m);
std::string_view to_string(OneDVariant v);

/// Direct sums stop once the certified tail is below this fraction of the partial sum.
inline constexpr double kTailTolerance = 1e-14;

struct PartitionSpec {
  Mode mode = Mode::three_d;
  double alpha_bar = 1.0;
  long cutoff = 0;  // number of retained terms; 0 selects it from the tail bound
  int em_order = 2;
  OneDVariant variant = OneDVariant::derived;
};

struct PartitionValue {
  double z = 0.0;
  Method method = Method::direct;
  double tail_bound = 0.0;
  long terms = 0;
};

/// Upper bound on the terms k >= cutoff. For three_d the term ratio
/// ((k+2)/(k+1))^2 x is largest at k = cutoff, giving a geometric bound;
/// +inf when that ratio is >= 1. For one_d the tail is exact.
double tail_bound(Mode mode, double alpha_bar, long cutoff);

/// Smallest cutoff whose tail bound is below rel_tol times the partial sum.
long auto_cutoff(Mode mode, double alpha_bar, double rel_tol = kTailTolerance);

/// Throws ConvergenceError (carrying auto_cutoff) when an explicit cutoff
/// leaves a tail above kTailTolerance of the sum.
PartitionValue partition_direct(const PartitionSpec& spec);

/// one_d only: 1 / (1 - exp(-1/alpha_bar)).
PartitionValue partition_exact_1d(double alpha_bar);

/// Boltzmann moments of the level energy e (units of xi, ground state 0)
/// over the truncated series: U = mean, C = variance / alpha_bar^2.
struct SeriesMoments {
  double z = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  long terms = 0;
  double tail_bound = 0.0;
};

SeriesMoments direct_moments(Mode mode, double alpha_bar, long cutoff = 0);

/// Summand data at the origin for the Euler-Maclaurin engine.
struct Summand {
  double value_at_zero = 0.0;
  std::function<double(int order)> derivative_at_zero;
};

/// (1/2) f(0) + integral - sum_{k=1..k_max} B_{2k}/(2k)! f^{(2k-1)}(0).
/// k_max must lie in [1, specfun::kBernoulliMax].
double em_sum(const Summand& f, double integral, int k_max);

/// d^order/dx^order of (c0 + c1 x + c2 x^2) e^{-b x} at x = 0.
double quadratic_exp_derivative(double b, double c0, double c1, double c2, int order);

/// Integral_0^inf (1+x)^2 exp(-beta_xi (2x + 3)) dx
///   = [1 + 2 beta_xi (1 + beta_xi)] exp(-3 beta_xi) / (4 beta_xi^3).
double convergence_integral(double beta_xi);

/// convergence_integral without the exp(-3 beta_xi) factor.
double convergence_integral_scaled(double beta_xi);

/// Three-dimensional k = 2 closed form,
///   1/3 + a^3/4 [1 + 2/a (1 + 1/a)] + 1/(20 a) [3 + 2/(3a) (1 - 1/(3a))].
template <class T>
T em_3d_closed_form(const T& a) {
  const T one(1);
  return one / T(3) + a * a * a / T(4) * (one + T(2) / a * (one + one / a)) +
         one / (T(20) * a) * (T(3) + T(2) / (T(3) * a) * (one - one / (T(3) * a)));
}

/// One-dimensional closed forms: derived = 1/2 + a + 1/(12a) - 1/(720 a^3);
/// paper_literal = 1/2 + a + 1/(12a) - a^3/5400.
template <class T>
T em_1d_closed_form(const T& a, OneDVariant v) {
  const T one(1);
  const T head = one / T(2) + a + one / (T(12) * a);
  if (v == OneDVariant::derived) return head - one / (T(720) * a * a * a);
  return head - a * a * a / T(5400);
}

PartitionValue partition_em_3d(double alpha_bar);
PartitionValue partition_em_1d(double alpha_bar, OneDVariant variant = OneDVariant::derived);

/// Generic engine applied to the mode's summand at order k_max.
PartitionValue partition_em_series(Mode mode, double alpha_bar, int k_max);

}  // namespace ncstat::partition
