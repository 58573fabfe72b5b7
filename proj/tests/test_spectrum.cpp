#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "ncstat/errors.hpp"
#include "ncstat/spectrum.hpp"

using namespace ncstat;
using spectrum::PotentialParams;

namespace {

PotentialParams natural() { return {}; }

PotentialParams dimensional() {
  PotentialParams p;
  p.a1 = 1.3;
  p.mass = 2.0;
  p.hbar = 0.8;
  return p;
}

// Gegenbauer recurrence: n C_n = 2x(n+l-1) C_{n-1} - (n+2l-2) C_{n-2}.
double gegenbauer(int n, double l, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * l * x;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * x * (k + l - 1.0) * cur - (k + 2.0 * l - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

// P_s^{(L,L)}(x) = (L+1)_s / (2L+1)_s C_s^{(L+1/2)}(x).
double jacobi_via_gegenbauer(int s, double L, double x) {
  double k = 1.0;
  for (int j = 0; j < s; ++j) k *= (L + 1.0 + j) / (2.0 * L + 1.0 + j);
  return k * gegenbauer(s, L + 0.5, x);
}

int interior_sign_changes(const PotentialParams& p, int n, double ell) {
  const double r_max = std::sqrt(60.0 / spectrum::radial_variable(p, 1.0));
  int changes = 0;
  double prev = spectrum::radial_wavefunction(p, n, ell, 1e-3 * r_max);
  for (int i = 2; i <= 20000; ++i) {
    const double v = spectrum::radial_wavefunction(p, n, ell, 1e-3 * r_max + i * r_max / 20000.0);
    if ((v < 0) != (prev < 0) && v != 0.0) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace

TEST_CASE("angular solution: free case s = m = 0") {
  const auto sol = spectrum::angular_solution(natural(), 0, 0);
  CHECK(sol.Lambda == 1.0);
  CHECK(sol.L == doctest::Approx(0.5));
  CHECK(sol.ell_eff == doctest::Approx(1.0));
  CHECK(sol.ell_integer == 1);
}

TEST_CASE("angular solution: no couplings gives Lambda = sqrt(1 + m^2)") {
  for (int m = 0; m <= 5; ++m) {
    for (int s = 0; s <= 3; ++s) {
      CHECK(spectrum::angular_solution(natural(), s, m).Lambda == doctest::Approx(std::sqrt(1.0 + m * m)));
    }
  }
}

TEST_CASE("angular solution: a3 = 0 gives L = -1/2 + Lambda + s") {
  PotentialParams p;
  p.a2 = 0.9;
  for (int m = 0; m <= 3; ++m) {
    for (int s = 0; s <= 3; ++s) {
      const auto sol = spectrum::angular_solution(p, s, m);
      CHECK(sol.L == doctest::Approx(-0.5 + sol.Lambda + s).epsilon(1e-14));
    }
  }
}

TEST_CASE("angular solution: discriminant stays positive for admissible couplings") {
  // Lambda^2 >= 1 + k a3^2 implies (1 + 2s + 2 Lambda)^2 - 4 k a3^2 >= 5 + 4 Lambda.
  for (double hbar : {0.05, 0.5, 1.0}) {
    for (double a3 : {0.0, 1.0, 7.0}) {
      PotentialParams p;
      p.a3 = a3;
      p.hbar = hbar;
      const double k = 2.0 * p.mass / (hbar * hbar);
      const auto sol = spectrum::angular_solution(p, 0, 0);
      const double t = 1.0 + 2.0 * sol.Lambda;
      CHECK(t * t - 4.0 * k * a3 * a3 >= 5.0 + 4.0 * sol.Lambda - 1e-9 * t * t);
    }
  }
  CHECK_THROWS_AS(spectrum::angular_solution(natural(), -1, 0), DomainError);
  CHECK_THROWS_AS(spectrum::angular_solution(natural(), 0, -2), DomainError);
}

TEST_CASE("energy: values, linearity and scaling") {
  PotentialParams p;
  p.hbar = 1.0;
  p.mass = 0.5;  // xi = 1
  REQUIRE(p.xi() == doctest::Approx(1.0));
  CHECK(spectrum::energy(p, 0, 0) == doctest::Approx(3.0));
  CHECK(spectrum::energy(p, 1, 2) == doctest::Approx(11.0));
  const auto q = dimensional();
  for (int n = 0; n <= 4; ++n) {
    for (int ell = 0; ell <= 4; ++ell) {
      CHECK(spectrum::reduced_energy(n + 1, ell) - spectrum::reduced_energy(n, ell) == 4.0);
      CHECK(spectrum::reduced_energy(n, ell + 1) - spectrum::reduced_energy(n, ell) == 2.0);
      auto twice = q;
      twice.a1 *= 2.0;
      CHECK(spectrum::energy(twice, n, ell) == doctest::Approx(2.0 * spectrum::energy(q, n, ell)));
    }
  }
}

TEST_CASE("energy: invalid quantum numbers") {
  CHECK_THROWS_AS(spectrum::energy(natural(), -1, 0), DomainError);
  CHECK_THROWS_AS(spectrum::energy(natural(), 0, -0.5), DomainError);
  PotentialParams bad;
  bad.a1 = 0.0;
  CHECK_THROWS_AS(spectrum::energy(bad, 0, 0), UsageError);
}

TEST_CASE("special cases: oscillator ground configuration") {
  const auto p = natural();
  CHECK(spectrum::special_case_ell(p, spectrum::SpecialCase::oscillator, 0, 0) == doctest::Approx(1.0));
  CHECK(spectrum::energy_special_case(p, spectrum::SpecialCase::oscillator, 0, 0, 0) ==
        doctest::Approx(5.0 * p.xi()));
  CHECK(spectrum::special_case_ell(p, spectrum::SpecialCase::oscillator, 0, 1,
                                   spectrum::EllConvention::integer) == 1.0);
}

TEST_CASE("special cases: a2_only reduces to the oscillator as a2 -> 0") {
  PotentialParams p;
  p.a2 = 1e-9;
  for (int m = 0; m <= 3; ++m) {
    const auto a = spectrum::special_case_angular(p, spectrum::SpecialCase::a2_only, 1, m);
    const auto b = spectrum::special_case_angular(natural(), spectrum::SpecialCase::oscillator, 1, m);
    CHECK(a.Lambda == doctest::Approx(b.Lambda).epsilon(1e-12));
    CHECK(a.L == doctest::Approx(b.L).epsilon(1e-12));
  }
}

TEST_CASE("special cases: a3_only tends to the a2-only form of L as a3 -> 0") {
  PotentialParams p;
  p.a3 = 1e-7;
  for (int s = 0; s <= 3; ++s) {
    const auto sol = spectrum::special_case_angular(p, spectrum::SpecialCase::a3_only, s, 2);
    CHECK(sol.L == doctest::Approx(-0.5 + sol.Lambda + s).epsilon(1e-10));
  }
}

TEST_CASE("special cases: energies equal 4n + 2 ell + 3 with the case's ell") {
  PotentialParams p;
  p.a2 = 0.6;
  for (int n = 0; n <= 3; ++n) {
    const double ell = spectrum::special_case_ell(p, spectrum::SpecialCase::a2_only, 1, 1);
    CHECK(spectrum::energy_special_case(p, spectrum::SpecialCase::a2_only, n, 1, 1) ==
          doctest::Approx(p.xi() * (4.0 * n + 2.0 * ell + 3.0)));
  }
}

TEST_CASE("special cases: mismatched couplings are usage errors") {
  PotentialParams p;
  p.a3 = 0.5;
  CHECK_THROWS_AS(spectrum::energy_special_case(p, spectrum::SpecialCase::a2_only, 0, 0, 0), UsageError);
  CHECK_THROWS_AS(spectrum::energy_special_case(p, spectrum::SpecialCase::oscillator, 0, 0, 0), UsageError);
  p.a3 = 0.0;
  p.a2 = 0.5;
  CHECK_THROWS_AS(spectrum::energy_special_case(p, spectrum::SpecialCase::a3_only, 0, 0, 0), UsageError);
}

TEST_CASE("degeneracy: closed form and both counting rules") {
  CHECK(spectrum::degeneracy(0) == 1);
  CHECK(spectrum::degeneracy(2) == 9);
  for (int np = 0; np <= 50; ++np) {
    long sum = 0;
    for (int ell = 0; ell <= np; ++ell) sum += 2 * ell + 1;
    CHECK(spectrum::degeneracy(np) == sum);
    CHECK(spectrum::degeneracy_by_enumeration(np, spectrum::CountingRule::paper_sum) == sum);
    CHECK(spectrum::degeneracy_by_enumeration(np, spectrum::CountingRule::parity) ==
          long(np + 1) * (np + 2) / 2);
  }
  CHECK_THROWS_AS(spectrum::degeneracy(-1), DomainError);
}

TEST_CASE("degeneracy: weighted levels regroup into 2n' + 3") {
  // Every (n', ell) with ell = 0..n' contributes 2 ell + 1 states at E/xi = 2n' + 3.
  std::map<double, long> levels;
  for (int np = 0; np <= 12; ++np) {
    for (int ell = 0; ell <= np; ++ell) {
      const double n_half = 0.5 * (np - ell);  // n' = 2n + ell
      levels[4.0 * n_half + 2.0 * ell + 3.0] += 2 * ell + 1;
    }
  }
  for (const auto& [e, w] : levels) {
    const int np = int(std::lround((e - 3.0) / 2.0));
    CHECK(e == 2.0 * np + 3.0);
    CHECK(w == spectrum::degeneracy(np));
  }
}

TEST_CASE("radial wavefunction: vanishes at the origin and is finite") {
  CHECK(spectrum::radial_wavefunction(natural(), 0, 0.0, 0.0) == 0.0);
  for (double r : {0.0, 0.5, 3.0, 40.0}) CHECK(std::isfinite(spectrum::radial_wavefunction(natural(), 3, 2.0, r)));
  CHECK_THROWS_AS(spectrum::radial_wavefunction(natural(), 0, 0.0, -1.0), DomainError);
}

TEST_CASE("radial wavefunction: satisfies the radial equation") {
  for (const auto& p : {natural(), dimensional()}) {
    const double k = 2.0 * p.mass / (p.hbar * p.hbar);
    for (int n = 0; n <= 2; ++n) {
      for (int ell = 0; ell <= 2; ++ell) {
        const double E = spectrum::energy(p, n, ell);
        const double h = 1e-4;
        double max_f = 0.0, max_res = 0.0;
        for (double r = 0.1; r <= 5.0; r += 0.01) {
          auto f = [&](double x) { return spectrum::radial_wavefunction(p, n, ell, x); };
          const double fr = f(r);
          const double second = (f(r + h) - 2.0 * fr + f(r - h)) / (h * h);
          const double v = p.a1 * p.a1 * r * r + ell * (ell + 1.0) / (k * r * r);
          max_res = std::max(max_res, std::abs(second + k * (E - v) * fr));
          max_f = std::max(max_f, std::abs(fr));
        }
        CHECK(max_res < 1e-5 * max_f);
      }
    }
  }
}

TEST_CASE("radial wavefunction: orthogonal for equal ell") {
  for (const auto& p : {natural(), dimensional()}) {
    for (double ell : {0.0, 1.0, 2.0, 1.7}) {
      for (int n1 = 0; n1 <= 2; ++n1) {
        for (int n2 = n1 + 1; n2 <= 3; ++n2) {
          const double o = spectrum::radial_overlap(p, n1, n2, ell);
          const double norms = spectrum::radial_norm(p, n1, ell) * spectrum::radial_norm(p, n2, ell);
          CHECK(std::abs(o) / norms < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("radial wavefunction: norm matches an independent Simpson rule") {
  const auto p = natural();
  const double r_max = 8.0, n_int = 4000;
  const double h = r_max / n_int;
  double s = 0.0;
  for (int i = 0; i <= n_int; ++i) {
    const double f = spectrum::radial_wavefunction(p, 2, 1.0, i * h);
    s += (i == 0 || i == n_int ? 1 : (i % 2 ? 4 : 2)) * f * f;
  }
  s *= h / 3.0;
  const double norm = spectrum::radial_norm(p, 2, 1.0);
  CHECK(norm * norm == doctest::Approx(s).epsilon(1e-9));
}

TEST_CASE("radial wavefunction: node count equals n") {
  for (const auto& p : {natural(), dimensional()}) {
    for (int n = 0; n <= 2; ++n) {
      for (double ell : {0.0, 1.0, 2.0}) CHECK(interior_sign_changes(p, n, ell) == n);
    }
  }
}

TEST_CASE("angular wavefunction: zero at the equator and pure prefactor for s = 0") {
  PotentialParams p;
  p.a2 = 0.3;
  for (int m = 0; m <= 2; ++m) {
    const auto sol = spectrum::angular_solution(p, 0, m);
    CHECK(spectrum::angular_wavefunction(sol, std::numbers::pi / 2) == doctest::Approx(0.0));
    for (double th : {0.3, 1.0, 2.5}) {
      const double y = 1.0 + std::cos(th);
      const double pref = std::pow(y, 1.0 + sol.Lambda) * std::pow(std::abs(1.0 - y), sol.Lambda);
      CHECK(spectrum::angular_wavefunction(sol, th) == doctest::Approx(pref).epsilon(1e-13));
    }
  }
}

TEST_CASE("angular wavefunction: Jacobi factor matches the Gegenbauer form") {
  PotentialParams p;
  p.a2 = 0.4;
  p.a3 = 0.2;
  for (int s = 0; s <= 4; ++s) {
    for (int m = 0; m <= 2; ++m) {
      const auto sol = spectrum::angular_solution(p, s, m);
      for (double th : {0.2, 0.9, 1.4, 2.1, 2.9}) {
        const double y = 1.0 + std::cos(th);
        const double ref = std::pow(y, 1.0 + sol.Lambda) * std::pow(std::abs(1.0 - y), sol.Lambda) *
                           jacobi_via_gegenbauer(s, sol.Lambda, 1.0 - y);
        CHECK(spectrum::angular_wavefunction(sol, th) == doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
      }
    }
  }
}

TEST_CASE("angular wavefunction: poles are domain errors") {
  const auto sol = spectrum::angular_solution(natural(), 0, 0);
  CHECK_THROWS_AS(spectrum::angular_wavefunction(sol, 0.0), DomainError);
  CHECK_THROWS_AS(spectrum::angular_wavefunction(sol, std::numbers::pi), DomainError);
}

TEST_CASE("total wavefunction: phase, reality and reduction") {
  PotentialParams p;
  p.a2 = 0.5;
  const auto sol0 = spectrum::angular_solution(p, 1, 0);
  const auto psi0 = spectrum::total_wavefunction(p, 1, sol0, 0.7, 1.1, 2.3);
  CHECK(psi0.imag() == 0.0);

  const auto sol2 = spectrum::angular_solution(p, 1, 2);
  const double ref = std::abs(spectrum::total_wavefunction(p, 2, sol2, 0.9, 0.8, 0.0));
  for (double phi : {0.4, 1.9, 5.0}) {
    for (auto sign : {spectrum::AzimuthalSign::minus, spectrum::AzimuthalSign::plus}) {
      CHECK(std::abs(spectrum::total_wavefunction(p, 2, sol2, 0.9, 0.8, phi, sign)) ==
            doctest::Approx(ref).epsilon(1e-14));
    }
  }
  const auto plus = spectrum::total_wavefunction(p, 2, sol2, 0.9, 0.8, 0.4, spectrum::AzimuthalSign::plus);
  const auto minus = spectrum::total_wavefunction(p, 2, sol2, 0.9, 0.8, 0.4, spectrum::AzimuthalSign::minus);
  CHECK(plus.imag() == doctest::Approx(-minus.imag()));

  // n = s = 0: radial part f(r)/r times the angular prefactor.
  const auto g = spectrum::angular_solution(p, 0, 0);
  const double r = 1.2, th = 0.6;
  const double expected =
      spectrum::radial_wavefunction(p, 0, g.ell_eff, r) / r * spectrum::angular_wavefunction(g, th);
  CHECK(spectrum::total_wavefunction(p, 0, g, r, th, 0.0).real() == doctest::Approx(expected).epsilon(1e-13));
}
