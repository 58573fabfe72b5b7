#pragma once

// Dimensionless thermal functions in alpha_bar = 1/(beta xi):
//
//   F = -a ln Z          U = a^2 (ln Z)'
//   S = ln Z + a (ln Z)'  C = 2a (ln Z)' + a^2 (ln Z)''
//
// computed from any partition-function provider, plus grid sweeps,
// the specific-heat continuity scan and the high-temperature asymptotics.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncstat/errors.hpp"
#include "ncstat/partition.hpp"

namespace ncstat::thermo {

enum class ZMethod { direct, euler_maclaurin, exact };
enum class DerivativeScheme { analytic, central_difference };

/// ln Z and its first two alpha_bar derivatives.
struct LogZ {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

struct ZProvider {
  /// Returns ln Z as a function smooth on (0, alpha_max]. Direct sums fix
  /// their cutoff from alpha_max so that difference stencils see one series.
  std::function<std::function<double(double)>(double alpha_max)> log_z_on;
  /// Exact derivatives, when the provider has them.
  std::function<LogZ(double)> analytic;
  partition::Method method = partition::Method::direct;
};

ZProvider make_provider(partition::Mode mode, ZMethod method,
                        partition::OneDVariant variant = partition::OneDVariant::derived);

struct ThermoPoint {
  double alpha_bar = 0.0;
  double Z = 0.0;
  double F_bar = 0.0;
  double U_bar = 0.0;
  double S_bar = 0.0;
  double C_bar = 0.0;
  partition::Method method = partition::Method::direct;
};

inline constexpr double kDefaultEta = 1e-5;

/// Falls back to central differences when the scheme is analytic but the
/// provider has no analytic derivatives. eta is the relative step.
ThermoPoint thermo_point(double alpha_bar, const ZProvider& z, DerivativeScheme scheme,
                         double eta = kDefaultEta);

ThermoPoint thermo_point(double alpha_bar, partition::Mode mode, ZMethod method,
                         DerivativeScheme scheme = DerivativeScheme::analytic,
                         double eta = kDefaultEta);

enum class Spacing { linear, log };

/// count points from lo to hi inclusive; count == 1 yields {lo}.
std::vector<double> make_grid(double lo, double hi, int count, Spacing spacing);

struct SweepSpec {
  std::vector<double> grid;
  partition::Mode mode = partition::Mode::three_d;
  ZMethod z_method = ZMethod::direct;
  DerivativeScheme scheme = DerivativeScheme::analytic;
  double eta = kDefaultEta;
  partition::OneDVariant variant = partition::OneDVariant::derived;

  /// Grid strictly increasing and positive; eta in (1e-8, 1e-2).
  void validate() const;
};

/// Strict properties at every consecutive grid pair.
struct MonotonicitySummary {
  bool f_decreasing = true;
  bool u_increasing = true;
  bool s_increasing = true;
  bool c_nondecreasing = true;
  double c_max = 0.0;
  std::size_t pairs = 0;
};

MonotonicitySummary summarize(const std::vector<ThermoPoint>& points);

struct SweepResult {
  std::vector<ThermoPoint> points;
  std::optional<MonotonicitySummary> summary;  // absent for single-point grids
};

/// Raised when a grid point fails; carries the point index.
class SweepError : public DomainError {
 public:
  SweepError(const std::string& what, std::size_t index) : DomainError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

SweepResult sweep(const SweepSpec& spec);

/// Jump statistics of C over a grid. For each interval the slope is compared
/// with the larger of its neighbouring slopes plus a floor of 1e-3 times the
/// mean slope over the grid; the ratio is the normalized jump.
struct ContinuityReport {
  std::size_t points = 0;
  double max_normalized_jump = 0.0;
  double at_alpha = 0.0;  // left end of the worst interval
  double max_abs_jump = 0.0;
  double threshold = 0.0;
  bool passed = true;
};

inline constexpr std::size_t kMinContinuityPoints = 1000;
/// Relative size below which a step in C_bar counts as zero.
inline constexpr double kContinuityResolution = 1e-12;

ContinuityReport continuity_scan(const std::vector<double>& grid, const std::vector<double>& c_values,
                                 double threshold);

/// Sweeps spec and scans its C values; needs at least kMinContinuityPoints.
ContinuityReport continuity_scan(const SweepSpec& spec, double threshold);

struct Asymptotics {
  double Z = 0.0;
  double U = 0.0;
  double C = 0.0;
};

/// Z ~ a^3/4, U ~ 3a, C ~ 3.
Asymptotics high_t_asymptotics(double alpha_bar);

}  // namespace ncstat::thermo
