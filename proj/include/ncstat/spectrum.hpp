#pragma once

// Bound states of the Schroedinger equation in the non-central potential
//
//   V(r, theta) = a1^2 r^2 + (a2^2 / sin^2 theta + a3^2 cot^2 theta) / r^2
//
// Separation gives an angular equation solved on y = 1 + cos(theta) and a
// radial equation solved on y = sqrt(2M) a1 r^2 / hbar. Both are mapped onto
// the Nikiforov-Uvarov template (nu_solver.hpp). Energies are reported either
// dimensionally or in units of xi = hbar a1 / sqrt(2M).

#include <complex>

#include "ncstat/nu_solver.hpp"

namespace ncstat::spectrum {

struct PotentialParams {
  double a1 = 1.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double mass = 1.0;
  double hbar = 1.0;

  /// Throws UsageError unless a1 > 0, a2, a3 >= 0, mass, hbar > 0 (all finite).
  void validate() const;

  /// Energy scale sqrt(hbar^2 a1^2 / 2M).
  double xi() const;
  /// 2M a2^2 / hbar^2
  double a2_scaled() const;
  /// 2M a3^2 / hbar^2
  double a3_scaled() const;
};

struct AngularSolution {
  int s = 0;
  int m = 0;
  double Lambda = 1.0;
  double L = 0.5;
  /// Real angular momentum entering the radial equation through
  /// ell (ell + 1) = separation constant; equals L + 1/2.
  double ell_eff = 1.0;
  /// floor(L + 1/2), for tabulation.
  int ell_integer = 1;
};

/// Lambda = sqrt(1 + m^2 + 2M(a2^2 + a3^2)/hbar^2),
/// L = -1 + sqrt((1 + 2s + 2 Lambda)^2 - 8 M a3^2 / hbar^2) / 2.
AngularSolution angular_solution(const PotentialParams& p, int s, int m);

/// How the angular equation's constant coefficient is read.
enum class AngularMapping {
  /// (m^2 + 2M(a2^2 + a3^2)/hbar^2) / 4: the reading that reproduces Lambda.
  lambda_consistent,
  /// (m^2 + 2M a2^2/hbar^2) / 4 + 2M a3^2/hbar^2, as typeset.
  printed_constant,
};

/// Angular equation as an NU problem in the separation constant
/// lambda = ell (ell + 1): beta1 = beta2 = 0, beta3 = 1/2.
nu::NUProblem angular_nu_problem(const PotentialParams& p, int m, double separation,
                                 AngularMapping mapping = AngularMapping::lambda_consistent);

/// Root of the angular quantization rule in the separation constant.
double solve_separation_constant(const PotentialParams& p, int s, int m,
                                 nu::QuantizationMode mode = nu::QuantizationMode::standard,
                                 AngularMapping mapping = AngularMapping::lambda_consistent);

/// L recovered from a separation constant: ell = -1/2 + sqrt(1/4 + lambda), L = ell - 1/2.
double L_from_separation(double separation);

enum class RadialMapping {
  /// h'' + (2mu + 1/2 - y)/y h' - (mu + 1/4 - eps)/y h = 0 (Kummer form,
  /// whose polynomial solutions are 1F1(-n; ell + 3/2; y)).
  kummer,
  /// Same with the last coefficient over y^2, as typeset.
  printed,
};

/// Radial equation for h(y) as an NU problem in eps = E / (4 xi), mu = (ell+1)/2.
nu::NUProblem radial_nu_problem(double ell, double eps, RadialMapping mapping = RadialMapping::kummer);

/// E/xi from the radial quantization rule at degree s = n.
double solve_radial_energy(int n, double ell, nu::QuantizationMode mode,
                           RadialMapping mapping = RadialMapping::kummer);

/// E = xi (4n + 2 ell + 3).
/// E / xi = 4n + 2 ell + 3.
double reduced_energy(int n, double ell);

double energy(const PotentialParams& p, int n, double ell);

enum class SpecialCase { a2_only, a3_only, oscillator };
enum class EllConvention { effective, integer };

/// Energies of the reduced potentials: a2 only (a3 = 0), a3 only (a2 = 0),
/// and the bare oscillator (a2 = a3 = 0, Lambda = sqrt(1 + m^2),
/// ell = Lambda + s). Throws UsageError on a case/parameter mismatch.
double energy_special_case(const PotentialParams& p, SpecialCase c, int n, int s, int m,
                           EllConvention conv = EllConvention::effective);

/// Lambda and L of a reduced potential; ell_eff = L + 1/2 as in the general case.
AngularSolution special_case_angular(const PotentialParams& p, SpecialCase c, int s, int m);

/// Angular momentum used by energy_special_case.
double special_case_ell(const PotentialParams& p, SpecialCase c, int s, int m,
                        EllConvention conv = EllConvention::effective);

/// (1 + n')^2
long degeneracy(int n_prime);

enum class CountingRule {
  paper_sum,  // every ell = 0..n' contributes 2 ell + 1
  parity,     // only ell = n' - 2n, n >= 0
};

/// Counts (ell, m) states at level n' by explicit enumeration.
long degeneracy_by_enumeration(int n_prime, CountingRule rule);

/// Variable y = sqrt(2M) a1 r^2 / hbar.
double radial_variable(const PotentialParams& p, double r);

/// Un-normalized f(r) = y^mu e^{-y/2} Gamma-ratio 1F1(-n; 3/2 + ell; y).
double radial_wavefunction(const PotentialParams& p, int n, double ell, double r);

/// Integral of f_{n1} f_{n2} over r in [0, inf) by adaptive quadrature.
double radial_overlap(const PotentialParams& p, int n1, int n2, double ell);
double radial_norm(const PotentialParams& p, int n, double ell);

/// Theta(y) ~ y^{1+Lambda} (1-y)^Lambda P_s^{(Lambda,Lambda)}(1-y), y = 1 + cos(theta).
/// For non-integer Lambda and 1 - y < 0 the factor is |1 - y|^Lambda.
/// theta must lie strictly inside (0, pi).
double angular_wavefunction(const AngularSolution& sol, double theta);

enum class AzimuthalSign { minus, plus };

/// Psi = (f(r)/r) Theta(theta) e^{-+ i m phi}, un-normalized, radial factor at
/// ell = sol.ell_eff.
std::complex<double> total_wavefunction(const PotentialParams& p, int n, const AngularSolution& sol,
                                        double r, double theta, double phi,
                                        AzimuthalSign sign = AzimuthalSign::minus);

}  // namespace ncstat::spectrum
