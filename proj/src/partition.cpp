#include "ncstat/partition.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ncstat/errors.hpp"
#include "ncstat/specfun.hpp"

namespace ncstat::partition {

std::string_view to_string(Mode m) { return m == Mode::three_d ? "3d" : "1d"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::euler_maclaurin: return "euler_maclaurin";
    case Method::closed_form_exact: return "closed_form_exact";
  }
  return "?";
}

std::string_view to_string(OneDVariant v) {
  return v == OneDVariant::derived ? "derived" : "paper";
}

namespace {

constexpr long kMaxTerms = 100'000'000;

void check_alpha(double alpha_bar) {
  if (!(alpha_bar > 0.0) || !std::isfinite(alpha_bar)) {
    throw DomainError("alpha_bar must be finite and > 0");
  }
}

// Neumaier compensated sum.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Level k: energy above the ground state (units of xi) and its weight.
double level_energy(Mode mode, long k) { return mode == Mode::three_d ? 2.0 * k : double(k); }

double level_weight(Mode mode, long k) {
  if (mode == Mode::one_d) return 1.0;
  const double g = 1.0 + k;
  return g * g;
}

double term(Mode mode, double alpha_bar, long k) {
  return level_weight(mode, k) * std::exp(-level_energy(mode, k) / alpha_bar);
}

}  // namespace

double tail_bound(Mode mode, double alpha_bar, long cutoff) {
  check_alpha(alpha_bar);
  if (cutoff < 0) throw DomainError("cutoff must be >= 0");
  if (mode == Mode::one_d) {
    // x^N / (1 - x), x = exp(-1/alpha_bar)
    return std::exp(-cutoff / alpha_bar) / -std::expm1(-1.0 / alpha_bar);
  }
  const double n = static_cast<double>(cutoff);
  const double growth = (n + 2.0) / (n + 1.0);
  const double log_ratio = 2.0 * std::log(growth) - 2.0 / alpha_bar;
  if (log_ratio >= 0.0) return std::numeric_limits<double>::infinity();
  const double first = std::exp(2.0 * std::log1p(n) - 2.0 * n / alpha_bar);
  return first / -std::expm1(log_ratio);
}

long auto_cutoff(Mode mode, double alpha_bar, double rel_tol) {
  check_alpha(alpha_bar);
  Accumulator partial;
  for (long k = 0; k < kMaxTerms; ++k) {
    partial.add(term(mode, alpha_bar, k));
    const long retained = k + 1;
    if (tail_bound(mode, alpha_bar, retained) <= rel_tol * partial.value()) return retained;
  }
  throw ConvergenceError("direct sum needs more than " + std::to_string(kMaxTerms) + " terms",
                         kMaxTerms);
}

SeriesMoments direct_moments(Mode mode, double alpha_bar, long cutoff) {
  check_alpha(alpha_bar);
  if (cutoff < 0) throw DomainError("cutoff must be >= 0");
  // The variance weights tail terms by (e_k - mean)^2, so it needs a
  // tighter cutoff than Z alone.
  const long n = cutoff == 0 ? auto_cutoff(mode, alpha_bar, kTailTolerance * 1e-8) : cutoff;

  Accumulator z, first;
  for (long k = 0; k < n; ++k) {
    const double w = term(mode, alpha_bar, k);
    z.add(w);
    first.add(w * level_energy(mode, k));
  }
  SeriesMoments out;
  out.z = z.value();
  out.mean = first.value() / out.z;
  Accumulator second;
  for (long k = 0; k < n; ++k) {
    const double d = level_energy(mode, k) - out.mean;
    second.add(term(mode, alpha_bar, k) * d * d);
  }
  out.variance = second.value() / out.z;
  out.terms = n;
  out.tail_bound = tail_bound(mode, alpha_bar, n);
  return out;
}

PartitionValue partition_direct(const PartitionSpec& spec) {
  check_alpha(spec.alpha_bar);
  if (spec.cutoff < 0) throw DomainError("cutoff must be >= 0");
  const long n = spec.cutoff == 0 ? auto_cutoff(spec.mode, spec.alpha_bar) : spec.cutoff;

  Accumulator z;
  for (long k = 0; k < n; ++k) z.add(term(spec.mode, spec.alpha_bar, k));

  PartitionValue v;
  v.z = z.value();
  v.method = Method::direct;
  v.terms = n;
  v.tail_bound = tail_bound(spec.mode, spec.alpha_bar, n);
  if (!(v.tail_bound <= kTailTolerance * v.z)) {
    const long suggested = auto_cutoff(spec.mode, spec.alpha_bar);
    const std::string bound = std::isfinite(v.tail_bound)
                                  ? "leaves tail bound " + std::to_string(v.tail_bound)
                                  : "is too small for a geometric tail bound";
    throw ConvergenceError("cutoff " + std::to_string(n) + " " + bound + "; use cutoff >= " +
                               std::to_string(suggested),
                           suggested);
  }
  return v;
}

PartitionValue partition_exact_1d(double alpha_bar) {
  check_alpha(alpha_bar);
  PartitionValue v;
  v.z = -1.0 / std::expm1(-1.0 / alpha_bar);
  v.method = Method::closed_form_exact;
  return v;
}

double em_sum(const Summand& f, double integral, int k_max) {
  if (k_max < 1 || k_max > specfun::kBernoulliMax) {
    throw RangeError("Euler-Maclaurin order must lie in [1, " +
                     std::to_string(specfun::kBernoulliMax) + "]");
  }
  double correction = 0.0;
  double factorial = 1.0;  // (2k)!
  for (int k = 1; k <= k_max; ++k) {
    factorial *= (2.0 * k - 1.0) * (2.0 * k);
    correction += specfun::to_double(specfun::bernoulli(k)) / factorial *
                  f.derivative_at_zero(2 * k - 1);
  }
  return 0.5 * f.value_at_zero + integral - correction;
}

double quadratic_exp_derivative(double b, double c0, double c1, double c2, int order) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  // Leibniz rule; g(0) = c0, g'(0) = c1, g''(0) = 2 c2, higher derivatives vanish.
  const double g[3] = {c0, c1, 2.0 * c2};
  double total = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= std::min(order, 2); ++i) {
    total += binom * g[i] * std::pow(-b, order - i);
    binom = binom * (order - i) / (i + 1.0);
  }
  return total;
}

double convergence_integral_scaled(double beta_xi) {
  if (!(beta_xi > 0.0)) throw DomainError("beta xi must be > 0");
  const double b3 = beta_xi * beta_xi * beta_xi;
  return (1.0 + 2.0 * beta_xi * (1.0 + beta_xi)) / (4.0 * b3);
}

double convergence_integral(double beta_xi) {
  return convergence_integral_scaled(beta_xi) * std::exp(-3.0 * beta_xi);
}

PartitionValue partition_em_3d(double alpha_bar) {
  check_alpha(alpha_bar);
  PartitionValue v;
  v.z = em_3d_closed_form(alpha_bar);
  v.method = Method::euler_maclaurin;
  return v;
}

PartitionValue partition_em_1d(double alpha_bar, OneDVariant variant) {
  check_alpha(alpha_bar);
  PartitionValue v;
  v.z = em_1d_closed_form(alpha_bar, variant);
  v.method = Method::euler_maclaurin;
  return v;
}

PartitionValue partition_em_series(Mode mode, double alpha_bar, int k_max) {
  check_alpha(alpha_bar);
  PartitionValue v;
  v.method = Method::euler_maclaurin;
  if (mode == Mode::three_d) {
    const double b = 2.0 / alpha_bar;
    // Shifting by exp(3 beta xi) turns the convergence integral into the
    // integral of the summand (1+x)^2 exp(-2x/alpha_bar).
    const double integral = convergence_integral_scaled(1.0 / alpha_bar);
    v.z = em_sum({1.0, [b](int k) { return quadratic_exp_derivative(b, 1.0, 2.0, 1.0, k); }},
                 integral, k_max);
  } else {
    const double b = 1.0 / alpha_bar;
    v.z = em_sum({1.0, [b](int k) { return quadratic_exp_derivative(b, 1.0, 0.0, 0.0, k); }},
                 alpha_bar, k_max);
  }
  return v;
}

}  // namespace ncstat::partition
