#include "ncstat/nu_solver.hpp"

#include <cmath>
#include <limits>

#include "ncstat/errors.hpp"

namespace ncstat::nu {

NUDerived derive(const NUProblem& p) {
  NUDerived d;
  d.beta4 = 0.5 * (1.0 - p.beta1);
  d.beta5 = 0.5 * (p.beta2 - 2.0 * p.beta3);
  d.beta6 = d.beta5 * d.beta5 + p.xi1;
  d.beta7 = 2.0 * d.beta4 * d.beta5 - p.xi2;
  d.beta8 = d.beta4 * d.beta4 + p.xi3;
  d.beta9 = p.beta3 * (d.beta7 + p.beta3 * d.beta8) + d.beta6;

  if (d.beta8 >= 0.0 && d.beta9 >= 0.0) {
    const double r8 = std::sqrt(d.beta8);
    const double r9 = std::sqrt(d.beta9);
    BranchParams std_branch;
    std_branch.beta10 = p.beta1 + 2.0 * d.beta4 + 2.0 * r8;
    std_branch.beta11 = p.beta2 - 2.0 * d.beta5 + 2.0 * (r9 + p.beta3 * r8);
    std_branch.beta12 = d.beta4 + r8;
    std_branch.beta13 = d.beta5 - (r9 + p.beta3 * r8);
    d.standard = std_branch;

    BranchParams star;
    star.beta10 = p.beta1 + 2.0 * d.beta4 - 2.0 * r8;
    star.beta11 = p.beta2 - 2.0 * d.beta5 - 2.0 * (r9 - p.beta3 * r8);
    star.beta12 = d.beta4 - r8;
    star.beta13 = d.beta5 - (r9 - p.beta3 * r8);
    d.starred = star;
  }
  return d;
}

namespace {

struct Roots {
  double r8;
  double r9;
};

Roots checked_roots(const NUDerived& d) {
  if (d.beta8 < 0.0) throw BranchError("negative beta8: no real bound state on this branch");
  if (d.beta9 < 0.0) throw BranchError("negative beta9: no real bound state on this branch");
  return {std::sqrt(d.beta8), std::sqrt(d.beta9)};
}

double standard_rule(const NUDerived& d, const NUProblem& p, double s, Roots r) {
  return p.beta2 * s - (2.0 * s + 1.0) * d.beta5 + (2.0 * s + 1.0) * (r.r9 + p.beta3 * r.r8) +
         s * (s - 1.0) * p.beta3 + d.beta7 + 2.0 * p.beta3 * d.beta8 + 2.0 * r.r8 * r.r9;
}

double beta3_zero_rule(const NUDerived& d, const NUProblem& p, double s, Roots r) {
  return p.beta2 * s + (1.0 - 2.0 * s) * d.beta5 + (2.0 * s + 1.0) * (r.r9 - p.beta3 * r.r8) +
         s * (s - 1.0) * p.beta3 + d.beta7 + 2.0 * p.beta3 * d.beta8 - 2.0 * r.r8 * r.r9;
}

void check_degree(int s) {
  if (s < 0) throw DomainError("polynomial degree s must be >= 0");
}

}  // namespace

double quantization_residual(const NUDerived& d, const NUProblem& p, int s, QuantizationMode mode) {
  check_degree(s);
  const Roots r = checked_roots(d);
  if (mode == QuantizationMode::standard) return standard_rule(d, p, s, r);
  if (p.beta3 != 0.0 && d.beta8 != 0.0) {
    throw UsageError("beta3_zero quantization requested with beta3 != 0");
  }
  return beta3_zero_rule(d, p, s, r);
}

std::pair<double, double> residuals_both(const NUDerived& d, const NUProblem& p, int s) {
  check_degree(s);
  const Roots r = checked_roots(d);
  return {standard_rule(d, p, s, r), beta3_zero_rule(d, p, s, r)};
}

double WavefunctionFactors::evaluate(double y) const {
  return std::pow(y, exponent1) * std::pow(1.0 - beta3 * y, exponent2) *
         specfun::jacobi_poly(jacobi, argument(y));
}

WavefunctionFactors wavefunction_factors(const NUDerived& d, const NUProblem& p, int s,
                                         QuantizationMode mode) {
  check_degree(s);
  if (p.beta3 == 0.0) {
    throw BranchError(
        "wavefunction factors need beta3 != 0; the beta3 = 0 limit is a confluent "
        "(Laguerre-type) form built by the caller");
  }
  const auto& branch = mode == QuantizationMode::standard ? d.standard : d.starred;
  if (!branch || !d.standard) throw BranchError("negative beta8 or beta9: no real solution");

  WavefunctionFactors w;
  w.beta3 = p.beta3;
  w.exponent1 = branch->beta12;
  w.exponent2 = -branch->beta12 - branch->beta13 / p.beta3;
  w.jacobi.degree = s;
  w.jacobi.alpha = branch->beta10 - 1.0;
  // The second index uses the unstarred beta10 on both branches.
  w.jacobi.beta = branch->beta11 / p.beta3 - d.standard->beta10 - 1.0;
  w.argument = AffineMap{1.0, -2.0 * p.beta3};
  return w;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const RootOptions& opt) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto eval = [&](double x) {
    try {
      return f(x);
    } catch (const BranchError&) {
      return nan;
    }
  };
  if (!(lo < hi)) throw DomainError("find_root: empty initial interval");

  double a = lo, b = hi;
  double fa = eval(a), fb = eval(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw DomainError("find_root: residual undefined at the initial interval ends");
  }

  double step_lo = b - a, step_hi = b - a;
  int iter = 0;
  while (std::signbit(fa) == std::signbit(fb) && fa != 0.0 && fb != 0.0) {
    if (++iter > opt.max_iterations) throw DomainError("find_root: no sign change found");
    const double na = a - step_lo;
    const double fna = eval(na);
    if (std::isfinite(fna)) {
      a = na;
      fa = fna;
      step_lo *= 2.0;
    } else {
      step_lo *= 0.5;
    }
    const double nb = b + step_hi;
    const double fnb = eval(nb);
    if (std::isfinite(fnb)) {
      b = nb;
      fb = fnb;
      step_hi *= 2.0;
    } else {
      step_hi *= 0.5;
    }
  }

  if (std::abs(fa) <= opt.residual_tol) return a;
  if (std::abs(fb) <= opt.residual_tol) return b;

  double last_width = b - a;
  for (iter = 0; iter < opt.max_iterations; ++iter) {
    const double mid = 0.5 * (a + b);
    double x = b - fb * (b - a) / (fb - fa);
    // Fall back to bisection when the secant leaves the bracket or stalls.
    if (!(x > a && x < b) || (iter % 3 == 2 && (b - a) > 0.5 * last_width)) x = mid;
    if (iter % 3 == 2) last_width = b - a;

    double fx = eval(x);
    if (!std::isfinite(fx)) {
      x = mid;
      fx = eval(x);
      if (!std::isfinite(fx)) throw DomainError("find_root: residual undefined inside bracket");
    }
    if (std::abs(fx) <= opt.residual_tol) return x;
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b))) {
      return std::abs(fa) < std::abs(fb) ? a : b;
    }
  }
  throw DomainError("find_root: iteration limit reached");
}

double solve_quantization(const std::function<NUProblem(double)>& build, int s,
                          QuantizationMode mode, double lo, double hi, const RootOptions& opt) {
  return find_root(
      [&](double u) {
        const NUProblem p = build(u);
        return quantization_residual(derive(p), p, s, mode);
      },
      lo, hi, opt);
}

}  // namespace ncstat::nu
