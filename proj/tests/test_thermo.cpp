#include <doctest.h>

#include <cmath>
#include <vector>

#include "ncstat/errors.hpp"
#include "ncstat/partition.hpp"
#include "ncstat/thermo.hpp"

using namespace ncstat;
using partition::Mode;
using thermo::DerivativeScheme;
using thermo::ZMethod;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

thermo::SweepSpec sweep_spec(Mode mode, double lo, double hi, int count, ZMethod method = ZMethod::direct) {
  thermo::SweepSpec s;
  s.grid = thermo::make_grid(lo, hi, count, thermo::Spacing::log);
  s.mode = mode;
  s.z_method = method;
  return s;
}

// ln Z = c ln(alpha_bar): U = c alpha_bar, C = c exactly.
thermo::ZProvider power_law_provider(double c) {
  thermo::ZProvider p;
  p.analytic = [c](double a) { return thermo::LogZ{c * std::log(a), c / a, -c / (a * a)}; };
  p.log_z_on = [c](double) { return std::function<double(double)>([c](double a) { return c * std::log(a); }); };
  return p;
}

}  // namespace

TEST_CASE("identity: U = F + alpha S") {
  for (auto mode : {Mode::three_d, Mode::one_d}) {
    for (auto method : {ZMethod::direct, ZMethod::euler_maclaurin}) {
      for (double a : thermo::make_grid(0.5, 50.0, 200, thermo::Spacing::log)) {
        const auto an = thermo::thermo_point(a, mode, method, DerivativeScheme::analytic);
        CHECK(rel(an.F_bar + a * an.S_bar, an.U_bar) < 1e-9);
        const auto fd = thermo::thermo_point(a, mode, method, DerivativeScheme::central_difference);
        CHECK(rel(fd.F_bar + a * fd.S_bar, fd.U_bar) < 1e-6);
      }
    }
  }
}

TEST_CASE("identity: C = dU/dalpha") {
  for (auto mode : {Mode::three_d, Mode::one_d}) {
    for (double a : thermo::make_grid(1.0, 50.0, 60, thermo::Spacing::log)) {
      const double h = 1e-4 * a;
      const double up = thermo::thermo_point(a + h, mode, ZMethod::direct).U_bar;
      const double dn = thermo::thermo_point(a - h, mode, ZMethod::direct).U_bar;
      const double c = thermo::thermo_point(a, mode, ZMethod::direct).C_bar;
      CHECK(rel((up - dn) / (2 * h), c) < 1e-5);
    }
  }
}

TEST_CASE("direct sum: specific heat is non-negative") {
  for (auto mode : {Mode::three_d, Mode::one_d}) {
    for (double a : thermo::make_grid(0.05, 200.0, 300, thermo::Spacing::log)) {
      CHECK(thermo::thermo_point(a, mode, ZMethod::direct).C_bar >= -1e-9);
    }
  }
}

TEST_CASE("analytic derivatives agree with finite differences of the exact 1d form") {
  // Independent closed forms: U = 1/(e^{1/a} - 1), C = e^{1/a} / (a (e^{1/a} - 1))^2.
  for (double a : {0.3, 1.0, 7.0, 60.0}) {
    const double em1 = std::expm1(1.0 / a);
    const double u = 1.0 / em1;
    const double c = std::exp(1.0 / a) / (a * a * em1 * em1);
    for (auto method : {ZMethod::direct, ZMethod::exact}) {
      const auto pt = thermo::thermo_point(a, Mode::one_d, method);
      CHECK(rel(pt.U_bar, u) < 1e-12);
      CHECK(rel(pt.C_bar, c) < 1e-11);
    }
  }
}

TEST_CASE("central differences converge at second order") {
  const auto provider = thermo::make_provider(Mode::three_d, ZMethod::euler_maclaurin);
  for (double a : {2.0, 5.0, 20.0}) {
    const auto exact = thermo::thermo_point(a, provider, DerivativeScheme::analytic);
    const double e1 = std::abs(thermo::thermo_point(a, provider, DerivativeScheme::central_difference, 1e-3).U_bar - exact.U_bar);
    const double e2 = std::abs(thermo::thermo_point(a, provider, DerivativeScheme::central_difference, 5e-4).U_bar - exact.U_bar);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
  }
}

TEST_CASE("central differences: step outside the admissible range") {
  CHECK_THROWS_AS(thermo::thermo_point(1.0, Mode::three_d, ZMethod::direct, DerivativeScheme::central_difference, 0.1),
                  UsageError);
  CHECK_THROWS_AS(thermo::thermo_point(1.0, Mode::three_d, ZMethod::direct, DerivativeScheme::central_difference, 1e-9),
                  UsageError);
}

TEST_CASE("high temperature: three-dimensional limits") {
  const auto pt = thermo::thermo_point(100.0, Mode::three_d, ZMethod::direct);
  CHECK(rel(pt.U_bar, 300.0) < 0.02);
  CHECK(rel(pt.C_bar, 3.0) < 0.01);
  const auto em = thermo::thermo_point(100.0, Mode::three_d, ZMethod::euler_maclaurin);
  CHECK(rel(em.C_bar, 3.0) < 0.01);
}

TEST_CASE("high temperature: one-dimensional heat is a third of the 3d value") {
  const auto one = thermo::thermo_point(100.0, Mode::one_d, ZMethod::direct);
  const auto three = thermo::thermo_point(100.0, Mode::three_d, ZMethod::direct);
  CHECK(rel(one.C_bar, 1.0) < 0.01);
  CHECK(three.C_bar / one.C_bar == doctest::Approx(3.0).epsilon(0.01));
}

TEST_CASE("asymptotics: values and approach") {
  const auto as = thermo::high_t_asymptotics(100.0);
  CHECK(as.Z == doctest::Approx(250000.0));
  CHECK(as.U == doctest::Approx(300.0));
  CHECK(as.C == 3.0);
  CHECK(thermo::high_t_asymptotics(0.1).C == 3.0);
  double prev = INFINITY;
  for (double a : {10.0, 20.0, 50.0, 100.0}) {
    const double dev = std::abs(partition::partition_em_3d(a).z / thermo::high_t_asymptotics(a).Z - 1.0);
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("sweep: monotonic shapes on the figure range") {
  for (auto mode : {Mode::three_d, Mode::one_d}) {
    const auto res = thermo::sweep(sweep_spec(mode, 0.5, 100.0, 400));
    REQUIRE(res.summary.has_value());
    CHECK(res.summary->f_decreasing);
    CHECK(res.summary->u_increasing);
    CHECK(res.summary->s_increasing);
    CHECK(res.summary->c_nondecreasing);
    CHECK(res.summary->c_max <= (mode == Mode::three_d ? 3.0 : 1.0) + 1e-2);
    CHECK(res.summary->pairs == 399);
    CHECK(res.points.size() == 400);
  }
}

TEST_CASE("sweep: summary detects a decreasing entropy") {
  std::vector<thermo::ThermoPoint> pts(3);
  for (int i = 0; i < 3; ++i) {
    pts[i].F_bar = -i;
    pts[i].U_bar = i;
    pts[i].S_bar = i == 2 ? 0.5 : i;
    pts[i].C_bar = 1.0;
  }
  const auto s = thermo::summarize(pts);
  CHECK(s.f_decreasing);
  CHECK(s.u_increasing);
  CHECK_FALSE(s.s_increasing);
  CHECK(s.c_nondecreasing);
}

TEST_CASE("sweep: one-dimensional values stay below the 3d values") {
  const auto g = sweep_spec(Mode::three_d, 1.0, 100.0, 200);
  auto g1 = g;
  g1.mode = Mode::one_d;
  const auto three = thermo::sweep(g).points;
  const auto one = thermo::sweep(g1).points;
  for (std::size_t i = 0; i < three.size(); ++i) {
    CHECK(one[i].Z <= three[i].Z);
    CHECK(std::abs(one[i].F_bar) <= std::abs(three[i].F_bar));
    CHECK(one[i].U_bar <= three[i].U_bar);
    CHECK(one[i].S_bar <= three[i].S_bar);
    CHECK(one[i].C_bar <= three[i].C_bar);
  }
}

TEST_CASE("sweep: single point carries no summary") {
  const auto res = thermo::sweep(sweep_spec(Mode::three_d, 2.0, 2.0, 1));
  CHECK(res.points.size() == 1);
  CHECK_FALSE(res.summary.has_value());
}

TEST_CASE("sweep: failing point aborts with its index") {
  // The printed 1d last term drives Z negative once alpha_bar^2 > 5400 (1 + ...).
  auto s = sweep_spec(Mode::one_d, 10.0, 200.0, 50, ZMethod::euler_maclaurin);
  s.variant = partition::OneDVariant::paper_literal;
  try {
    thermo::sweep(s);
    FAIL("expected a sweep error");
  } catch (const thermo::SweepError& e) {
    CHECK(e.index() > 0);
    CHECK(e.index() < 50);
    const double a = s.grid[e.index()];
    CHECK(partition::partition_em_1d(a, partition::OneDVariant::paper_literal).z <= 0.0);
    CHECK(partition::partition_em_1d(s.grid[e.index() - 1], partition::OneDVariant::paper_literal).z > 0.0);
  }
}

TEST_CASE("sweep: invalid specs") {
  thermo::SweepSpec s;
  CHECK_THROWS_AS(thermo::sweep(s), UsageError);
  s.grid = {1.0, 0.5};
  CHECK_THROWS_AS(thermo::sweep(s), UsageError);
  s.grid = {1.0, 2.0};
  s.eta = 0.5;
  CHECK_THROWS_AS(thermo::sweep(s), UsageError);
  CHECK_THROWS_AS(thermo::make_provider(Mode::three_d, ZMethod::exact), UsageError);
}

TEST_CASE("grid construction") {
  const auto lin = thermo::make_grid(1.0, 3.0, 5, thermo::Spacing::linear);
  CHECK(lin == std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0});
  const auto lg = thermo::make_grid(0.5, 100.0, 500, thermo::Spacing::log);
  CHECK(lg.front() == 0.5);
  CHECK(lg.back() == 100.0);
  CHECK(lg[250] / lg[249] == doctest::Approx(lg[2] / lg[1]).epsilon(1e-12));
  CHECK(thermo::make_grid(4.0, 4.0, 1, thermo::Spacing::log) == std::vector<double>{4.0});
  CHECK_THROWS_AS(thermo::make_grid(1.0, 2.0, 0, thermo::Spacing::log), UsageError);
  CHECK_THROWS_AS(thermo::make_grid(0.0, 2.0, 3, thermo::Spacing::log), UsageError);
  CHECK_THROWS_AS(thermo::make_grid(2.0, 1.0, 3, thermo::Spacing::linear), UsageError);
}

TEST_CASE("continuity: dense direct-sum scan shows no jump") {
  auto s = sweep_spec(Mode::three_d, 0.1, 50.0, 2000);
  const auto r = thermo::continuity_scan(s, 10.0);
  CHECK(r.points == 2000);
  CHECK(r.passed);
  CHECK(r.max_normalized_jump < 10.0);
  const auto pts = thermo::sweep(s).points;
  for (const auto& p : pts) CHECK(p.C_bar <= 3.0 + 1e-2);
}

TEST_CASE("continuity: power-law partition function has constant heat and no jumps") {
  const auto provider = power_law_provider(2.0);
  const auto grid = thermo::make_grid(0.5, 100.0, 1000, thermo::Spacing::log);
  std::vector<double> c;
  for (double a : grid) {
    const auto pt = thermo::thermo_point(a, provider, DerivativeScheme::analytic);
    CHECK(pt.C_bar == doctest::Approx(2.0).epsilon(1e-14));
    c.push_back(pt.C_bar);
  }
  const auto r = thermo::continuity_scan(grid, c, 10.0);
  CHECK(r.max_abs_jump < 1e-14);
  CHECK(r.passed);
}

TEST_CASE("continuity: a step in the heat is flagged") {
  const auto grid = thermo::make_grid(0.5, 100.0, 1000, thermo::Spacing::linear);
  std::vector<double> c;
  for (double a : grid) c.push_back(std::tanh(a / 20.0) + (a > 40.0 ? 0.2 : 0.0));
  const auto r = thermo::continuity_scan(grid, c, 10.0);
  CHECK_FALSE(r.passed);
  CHECK(r.at_alpha == doctest::Approx(40.0).epsilon(0.01));
}

TEST_CASE("continuity: sparse grids are refused") {
  CHECK_THROWS_AS(thermo::continuity_scan(sweep_spec(Mode::three_d, 0.5, 10.0, 100), 10.0), UsageError);
  CHECK_THROWS_AS(thermo::continuity_scan(std::vector<double>{1, 2}, std::vector<double>{1, 1}, 10.0), UsageError);
}
