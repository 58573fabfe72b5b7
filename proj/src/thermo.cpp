#include "ncstat/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ncstat::thermo {

using partition::Mode;
using partition::OneDVariant;

namespace {

void check_alpha(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("alpha_bar must be finite and > 0");
}

double checked_log(double z, double a) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw EvaluationError("partition function is not positive at alpha_bar=" + std::to_string(a));
  }
  return std::log(z);
}

// ln Z derivatives from Z, Z', Z''.
LogZ from_z(double z, double dz, double d2z, double a) {
  LogZ out;
  out.value = checked_log(z, a);
  out.d1 = dz / z;
  out.d2 = d2z / z - out.d1 * out.d1;
  return out;
}

// Closed form with the three-dimensional k = 2 expression expanded:
//   1/3 + a/2 + a^2/2 + a^3/4 + 3/(20a) + 1/(30a^2) - 1/(90a^3)
LogZ em3d_log(double a) {
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
  const double z = partition::em_3d_closed_form(a);
  const double dz = 0.5 + a + 0.75 * a2 - 3.0 / (20.0 * a2) - 1.0 / (15.0 * a3) + 1.0 / (30.0 * a4);
  const double d2z = 1.0 + 1.5 * a + 3.0 / (10.0 * a3) + 1.0 / (5.0 * a4) - 2.0 / (15.0 * a5);
  return from_z(z, dz, d2z, a);
}

LogZ em1d_log(double a, OneDVariant v) {
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
  const double z = partition::em_1d_closed_form(a, v);
  double dz = 1.0 - 1.0 / (12.0 * a2);
  double d2z = 1.0 / (6.0 * a3);
  if (v == OneDVariant::derived) {
    dz += 1.0 / (240.0 * a4);
    d2z -= 1.0 / (60.0 * a5);
  } else {
    dz -= a2 / 1800.0;
    d2z -= a / 900.0;
  }
  return from_z(z, dz, d2z, a);
}

LogZ exact1d_log(double a) {
  const double x = std::exp(-1.0 / a);
  const double one_minus_x = -std::expm1(-1.0 / a);
  LogZ out;
  out.value = -std::log(one_minus_x);
  out.d1 = x / (one_minus_x * a * a);
  out.d2 = x / (one_minus_x * one_minus_x * a * a * a * a) - 2.0 * x / (one_minus_x * a * a * a);
  return out;
}

LogZ direct_log(Mode mode, double a) {
  const auto m = partition::direct_moments(mode, a);
  LogZ out;
  out.value = checked_log(m.z, a);
  out.d1 = m.mean / (a * a);
  out.d2 = m.variance / (a * a * a * a) - 2.0 * m.mean / (a * a * a);
  return out;
}

}  // namespace

ZProvider make_provider(Mode mode, ZMethod method, OneDVariant variant) {
  ZProvider p;
  switch (method) {
    case ZMethod::direct:
      p.method = partition::Method::direct;
      p.analytic = [mode](double a) { return direct_log(mode, a); };
      p.log_z_on = [mode](double alpha_max) {
        const long cutoff = partition::auto_cutoff(mode, alpha_max);
        return std::function<double(double)>([mode, cutoff](double a) {
          return checked_log(partition::partition_direct({mode, a, cutoff}).z, a);
        });
      };
      break;
    case ZMethod::euler_maclaurin:
      p.method = partition::Method::euler_maclaurin;
      if (mode == Mode::three_d) {
        p.analytic = em3d_log;
      } else {
        p.analytic = [variant](double a) { return em1d_log(a, variant); };
      }
      p.log_z_on = [mode, variant](double) {
        return std::function<double(double)>([mode, variant](double a) {
          const double z = mode == Mode::three_d ? partition::em_3d_closed_form(a)
                                                 : partition::em_1d_closed_form(a, variant);
          return checked_log(z, a);
        });
      };
      break;
    case ZMethod::exact:
      if (mode != Mode::one_d) throw UsageError("the exact closed form exists for the 1d mode only");
      p.method = partition::Method::closed_form_exact;
      p.analytic = exact1d_log;
      p.log_z_on = [](double) {
        return std::function<double(double)>([](double a) { return exact1d_log(a).value; });
      };
      break;
  }
  return p;
}

ThermoPoint thermo_point(double a, const ZProvider& z, DerivativeScheme scheme, double eta) {
  check_alpha(a);
  LogZ lz;
  if (scheme == DerivativeScheme::analytic && z.analytic) {
    lz = z.analytic(a);
  } else {
    if (!(eta > 1e-8 && eta < 1e-2)) throw UsageError("relative step eta must lie in (1e-8, 1e-2)");
    const double h = eta * a;
    const auto log_z = z.log_z_on(a + h);
    const double lo = log_z(a - h), mid = log_z(a), hi = log_z(a + h);
    lz.value = mid;
    lz.d1 = (hi - lo) / (2.0 * h);
    lz.d2 = (hi - 2.0 * mid + lo) / (h * h);
  }
  ThermoPoint pt;
  pt.alpha_bar = a;
  pt.Z = std::exp(lz.value);
  pt.F_bar = -a * lz.value;
  pt.U_bar = a * a * lz.d1;
  pt.S_bar = lz.value + a * lz.d1;
  pt.C_bar = 2.0 * a * lz.d1 + a * a * lz.d2;
  pt.method = z.method;
  return pt;
}

ThermoPoint thermo_point(double a, Mode mode, ZMethod method, DerivativeScheme scheme, double eta) {
  return thermo_point(a, make_provider(mode, method), scheme, eta);
}

std::vector<double> make_grid(double lo, double hi, int count, Spacing spacing) {
  if (count < 1) throw UsageError("grid needs at least one point");
  if (!(lo > 0.0) || !std::isfinite(hi)) throw UsageError("grid bounds must be positive and finite");
  if (count > 1 && !(hi > lo)) throw UsageError("grid upper bound must exceed the lower bound");
  std::vector<double> g(static_cast<std::size_t>(count));
  if (count == 1) {
    g[0] = lo;
    return g;
  }
  const double last = count - 1.0;
  for (int i = 0; i < count; ++i) {
    const double t = i / last;
    g[static_cast<std::size_t>(i)] =
        spacing == Spacing::linear ? lo + (hi - lo) * t : lo * std::exp(std::log(hi / lo) * t);
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

void SweepSpec::validate() const {
  if (grid.empty()) throw UsageError("sweep grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) throw UsageError("grid values must be > 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw UsageError("grid must be strictly increasing");
  }
  if (!(eta > 1e-8 && eta < 1e-2)) throw UsageError("relative step eta must lie in (1e-8, 1e-2)");
}

MonotonicitySummary summarize(const std::vector<ThermoPoint>& pts) {
  MonotonicitySummary s;
  s.c_max = pts.empty() ? 0.0 : pts.front().C_bar;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto& a = pts[i - 1];
    const auto& b = pts[i];
    s.f_decreasing = s.f_decreasing && b.F_bar < a.F_bar;
    s.u_increasing = s.u_increasing && b.U_bar > a.U_bar;
    s.s_increasing = s.s_increasing && b.S_bar > a.S_bar;
    s.c_nondecreasing = s.c_nondecreasing && b.C_bar >= a.C_bar;
    s.c_max = std::max(s.c_max, b.C_bar);
    ++s.pairs;
  }
  return s;
}

SweepResult sweep(const SweepSpec& spec) {
  spec.validate();
  const ZProvider z = make_provider(spec.mode, spec.z_method, spec.variant);
  SweepResult out;
  out.points.reserve(spec.grid.size());
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    try {
      out.points.push_back(thermo_point(spec.grid[i], z, spec.scheme, spec.eta));
    } catch (const std::exception& e) {
      throw SweepError("sweep point " + std::to_string(i) + " (alpha_bar=" +
                           std::to_string(spec.grid[i]) + "): " + e.what(),
                       i);
    }
  }
  if (out.points.size() > 1) out.summary = summarize(out.points);
  return out;
}

ContinuityReport continuity_scan(const std::vector<double>& grid, const std::vector<double>& c,
                                 double threshold) {
  if (grid.size() != c.size()) throw UsageError("continuity_scan: grid and values differ in size");
  if (grid.size() < 3) throw UsageError("continuity_scan: needs at least three points");
  ContinuityReport r;
  r.points = grid.size();
  r.threshold = threshold;

  const std::size_t n = grid.size() - 1;  // intervals
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  // Differences at rounding level carry no slope information.
  const double resolution = kContinuityResolution * scale;
  std::vector<double> slope(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = grid[i + 1] - grid[i];
    if (!(h > 0.0)) throw UsageError("continuity_scan: grid must be strictly increasing");
    const double jump = c[i + 1] - c[i];
    slope[i] = std::abs(jump) <= resolution ? 0.0 : jump / h;
    r.max_abs_jump = std::max(r.max_abs_jump, std::abs(jump));
  }
  const auto [cmin, cmax] = std::minmax_element(c.begin(), c.end());
  const double mean_slope = (*cmax - *cmin) / (grid.back() - grid.front());
  const double floor = std::max(1e-3 * mean_slope, std::numeric_limits<double>::min());

  for (std::size_t i = 0; i < n; ++i) {
    if (slope[i] == 0.0) continue;
    double neighbour = 0.0;
    if (i > 0) neighbour = std::abs(slope[i - 1]);
    if (i + 1 < n) neighbour = std::max(neighbour, std::abs(slope[i + 1]));
    const double ratio = std::abs(slope[i]) / (neighbour + floor);
    if (ratio > r.max_normalized_jump) {
      r.max_normalized_jump = ratio;
      r.at_alpha = grid[i];
    }
  }
  r.passed = r.max_normalized_jump <= threshold;
  return r;
}

ContinuityReport continuity_scan(const SweepSpec& spec, double threshold) {
  if (spec.grid.size() < kMinContinuityPoints) {
    throw UsageError("continuity_scan needs a grid of at least " +
                     std::to_string(kMinContinuityPoints) + " points");
  }
  const auto res = sweep(spec);
  std::vector<double> c;
  c.reserve(res.points.size());
  for (const auto& p : res.points) c.push_back(p.C_bar);
  return continuity_scan(spec.grid, c, threshold);
}

Asymptotics high_t_asymptotics(double a) {
  check_alpha(a);
  return {a * a * a / 4.0, 3.0 * a, 3.0};
}

}  // namespace ncstat::thermo
