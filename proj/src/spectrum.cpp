#include "ncstat/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "ncstat/errors.hpp"
#include "ncstat/quadrature.hpp"
#include "ncstat/specfun.hpp"

namespace ncstat::spectrum {

void PotentialParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(finite(a1) && finite(a2) && finite(a3) && finite(mass) && finite(hbar))) {
    throw UsageError("potential parameters must be finite");
  }
  if (!(a1 > 0.0)) throw UsageError("a1 must be > 0 for bound states");
  if (a2 < 0.0 || a3 < 0.0) throw UsageError("a2 and a3 must be >= 0");
  if (!(mass > 0.0)) throw UsageError("mass must be > 0");
  if (!(hbar > 0.0)) throw UsageError("hbar must be > 0");
}

double PotentialParams::xi() const { return hbar * a1 / std::sqrt(2.0 * mass); }
double PotentialParams::a2_scaled() const { return 2.0 * mass * a2 * a2 / (hbar * hbar); }
double PotentialParams::a3_scaled() const { return 2.0 * mass * a3 * a3 / (hbar * hbar); }

namespace {

void check_quantum_numbers(int s, int m) {
  if (s < 0) throw DomainError("s must be >= 0");
  if (m < 0) throw DomainError("m must be >= 0");
}

double L_from_lambda(double Lambda, int s, double a3_scaled) {
  const double t = 1.0 + 2.0 * s + 2.0 * Lambda;
  const double disc = t * t - 4.0 * a3_scaled;
  if (disc < 0.0) throw DomainError("no real angular solution: negative discriminant");
  return -1.0 + 0.5 * std::sqrt(disc);
}

}  // namespace

AngularSolution angular_solution(const PotentialParams& p, int s, int m) {
  p.validate();
  check_quantum_numbers(s, m);
  AngularSolution sol;
  sol.s = s;
  sol.m = m;
  sol.Lambda = std::sqrt(1.0 + double(m) * m + p.a2_scaled() + p.a3_scaled());
  sol.L = L_from_lambda(sol.Lambda, s, p.a3_scaled());
  sol.ell_eff = sol.L + 0.5;
  sol.ell_integer = static_cast<int>(std::floor(sol.L + 0.5));
  return sol;
}

nu::NUProblem angular_nu_problem(const PotentialParams& p, int m, double separation,
                                 AngularMapping mapping) {
  const double a2s = p.a2_scaled();
  const double a3s = p.a3_scaled();
  nu::NUProblem q;
  q.beta1 = 0.0;
  q.beta2 = 0.0;
  q.beta3 = 0.5;
  q.xi1 = 0.25 * (separation + a3s);
  q.xi2 = 0.5 * (separation + a3s);
  q.xi3 = mapping == AngularMapping::lambda_consistent ? 0.25 * (double(m) * m + a2s + a3s)
                                                       : 0.25 * (double(m) * m + a2s) + a3s;
  return q;
}

double solve_separation_constant(const PotentialParams& p, int s, int m, nu::QuantizationMode mode,
                                 AngularMapping mapping) {
  p.validate();
  check_quantum_numbers(s, m);
  return nu::solve_quantization(
      [&](double lambda) { return angular_nu_problem(p, m, lambda, mapping); }, s, mode, 0.0, 1.0);
}

double L_from_separation(double separation) {
  if (separation < -0.25) throw DomainError("separation constant below -1/4 has no real ell");
  return -1.0 + std::sqrt(0.25 + separation);
}

nu::NUProblem radial_nu_problem(double ell, double eps, RadialMapping mapping) {
  const double mu = 0.5 * (ell + 1.0);
  nu::NUProblem q;
  q.beta1 = 2.0 * mu + 0.5;
  q.beta2 = 1.0;
  q.beta3 = 0.0;
  q.xi1 = 0.0;
  if (mapping == RadialMapping::kummer) {
    q.xi2 = eps - mu - 0.25;
    q.xi3 = 0.0;
  } else {
    q.xi2 = 0.0;
    q.xi3 = mu + 0.25 - eps;
  }
  return q;
}

double solve_radial_energy(int n, double ell, nu::QuantizationMode mode, RadialMapping mapping) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (!(ell >= 0.0)) throw DomainError("ell must be >= 0");
  const double eps = nu::solve_quantization(
      [&](double e) { return radial_nu_problem(ell, e, mapping); }, n, mode, 0.0, 0.5);
  return 4.0 * eps;
}

double reduced_energy(int n, double ell) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (!(ell >= 0.0)) throw DomainError("ell must be >= 0");
  return 4.0 * n + 2.0 * ell + 3.0;
}

double energy(const PotentialParams& p, int n, double ell) {
  p.validate();
  return p.xi() * reduced_energy(n, ell);
}

AngularSolution special_case_angular(const PotentialParams& p, SpecialCase c, int s, int m) {
  p.validate();
  check_quantum_numbers(s, m);
  AngularSolution sol;
  sol.s = s;
  sol.m = m;
  switch (c) {
    case SpecialCase::a2_only:
      if (p.a3 != 0.0) throw UsageError("a2_only case requires a3 = 0");
      sol.Lambda = std::sqrt(1.0 + double(m) * m + p.a2_scaled());
      sol.L = -0.5 + sol.Lambda + s;
      break;
    case SpecialCase::a3_only:
      if (p.a2 != 0.0) throw UsageError("a3_only case requires a2 = 0");
      sol.Lambda = std::sqrt(1.0 + double(m) * m + p.a3_scaled());
      sol.L = L_from_lambda(sol.Lambda, s, p.a3_scaled());
      break;
    case SpecialCase::oscillator:
      if (p.a2 != 0.0 || p.a3 != 0.0) throw UsageError("oscillator case requires a2 = a3 = 0");
      sol.Lambda = std::sqrt(1.0 + double(m) * m);
      sol.L = -0.5 + sol.Lambda + s;
      break;
  }
  sol.ell_eff = sol.L + 0.5;
  sol.ell_integer = static_cast<int>(std::floor(sol.ell_eff));
  return sol;
}

double special_case_ell(const PotentialParams& p, SpecialCase c, int s, int m, EllConvention conv) {
  const AngularSolution sol = special_case_angular(p, c, s, m);
  return conv == EllConvention::effective ? sol.ell_eff : double(sol.ell_integer);
}

double energy_special_case(const PotentialParams& p, SpecialCase c, int n, int s, int m,
                           EllConvention conv) {
  if (n < 0) throw DomainError("n must be >= 0");
  const double ell = special_case_ell(p, c, s, m, conv);
  if (c == SpecialCase::oscillator) return p.xi() * (4.0 * n + 2.0 * ell + 3.0);
  const int N = 2 * n;
  return p.xi() * (2.0 * (N + ell) + 3.0);
}

long degeneracy(int n_prime) {
  if (n_prime < 0) throw DomainError("n' must be >= 0");
  const long k = 1L + n_prime;
  return k * k;
}

long degeneracy_by_enumeration(int n_prime, CountingRule rule) {
  if (n_prime < 0) throw DomainError("n' must be >= 0");
  long count = 0;
  for (int ell = 0; ell <= n_prime; ++ell) {
    if (rule == CountingRule::parity && (n_prime - ell) % 2 != 0) continue;
    for (int m = -ell; m <= ell; ++m) ++count;
  }
  return count;
}

double radial_variable(const PotentialParams& p, double r) {
  return std::sqrt(2.0 * p.mass) * p.a1 * r * r / p.hbar;
}

namespace {

// Everything in f except y^mu.
double radial_tail(int n, double ell, double y) {
  return std::exp(-0.5 * y) * specfun::gamma_ratio_prefactor(n, ell) *
         specfun::hyp1f1_terminating({n, 1.5 + ell, y});
}

void check_radial_args(int n, double ell, double r) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (!(ell >= 0.0)) throw DomainError("ell must be >= 0");
  if (!(r >= 0.0)) throw DomainError("r must be >= 0");
}

}  // namespace

double radial_wavefunction(const PotentialParams& p, int n, double ell, double r) {
  p.validate();
  check_radial_args(n, ell, r);
  const double y = radial_variable(p, r);
  const double mu = 0.5 * (ell + 1.0);
  return std::pow(y, mu) * radial_tail(n, ell, y);
}

double radial_overlap(const PotentialParams& p, int n1, int n2, double ell) {
  p.validate();
  // Integrate up to y = 200, beyond which e^{-y} is below double resolution.
  const double c = radial_variable(p, 1.0);
  const double r_max = std::sqrt(200.0 / c);
  const auto res = quadrature::integrate(
      [&](double r) { return radial_wavefunction(p, n1, ell, r) * radial_wavefunction(p, n2, ell, r); },
      0.0, r_max);
  return res.value;
}

double radial_norm(const PotentialParams& p, int n, double ell) {
  return std::sqrt(radial_overlap(p, n, n, ell));
}

double angular_wavefunction(const AngularSolution& sol, double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw DomainError("angular_wavefunction: theta must lie in (0, pi)");
  }
  const double y = 1.0 + std::cos(theta);
  const double one_minus_y = -std::cos(theta);
  const double Lambda = sol.Lambda;
  const double power = Lambda == std::floor(Lambda) ? std::pow(one_minus_y, Lambda)
                                                    : std::pow(std::abs(one_minus_y), Lambda);
  return std::pow(y, 1.0 + Lambda) * power *
         specfun::jacobi_poly({sol.s, Lambda, Lambda}, one_minus_y);
}

std::complex<double> total_wavefunction(const PotentialParams& p, int n, const AngularSolution& sol,
                                        double r, double theta, double phi, AzimuthalSign sign) {
  p.validate();
  const double ell = sol.ell_eff;
  check_radial_args(n, ell, r);
  // f(r)/r = c^mu r^ell (...) with y = c r^2, which stays finite at r = 0.
  const double c = radial_variable(p, 1.0);
  const double mu = 0.5 * (ell + 1.0);
  const double radial = std::pow(c, mu) * std::pow(r, ell) * radial_tail(n, ell, c * r * r);
  const double angular = angular_wavefunction(sol, theta);
  const double phase = (sign == AzimuthalSign::minus ? -1.0 : 1.0) * sol.m * phi;
  return radial * angular * std::polar(1.0, phase);
}

}  // namespace ncstat::spectrum
