#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vplin/dispersion_relation.hpp"
#include "vplin/poisson_kernels.hpp"

using namespace vplin;

TEST_SUITE_BEGIN("dispersion_relation");

TEST_CASE("penrose check reports stability for all built-in equilibria") {
  const std::vector<double> probes{0.1, 0.5, 1.0, 2.0, 5.0};
  auto mx = RadialEquilibrium::maxwellian();
  CHECK(penrose_check(mx, probes).stable);
  for (int j = 1; j <= 4; ++j) {
    const auto rep =
        penrose_check(RadialEquilibrium::generalized_poisson(j), probes);
    CHECK(rep.stable);
    for (const auto& [p, w] : rep.winding) CHECK(w == 0);
  }
}

TEST_CASE("penrose rejects non-positive probes") {
  auto mx = RadialEquilibrium::maxwellian();
  CHECK_THROWS_AS(penrose_check(mx, {0.5, -1.0}), DomainError);
}

TEST_CASE("poisson equilibrium has the exact dispersion law") {
  const auto gp1 = RadialEquilibrium::generalized_poisson(1);
  for (double r : {0.01, 0.1, 0.2, 0.3}) {
    const auto dp = solve_zeta(gp1, r);
    CHECK(std::abs(dp.omega - Complex(1.0, r)) < 1e-12);
    CHECK(dp.residual < 1e-12);
    CHECK(std::abs(dp.m_l) < 1e-10);  // no error term for the Poisson case
  }
}

TEST_CASE("solve_zeta residual and conjugate zero") {
  for (const auto& eq : {RadialEquilibrium::maxwellian(),
                         RadialEquilibrium::generalized_poisson(2)}) {
    for (double r : {0.1, 0.2}) {
      const auto dp = solve_zeta(eq, r);
      CHECK(dp.residual < 1e-10);
      CHECK(dp.zeta.imag() >= 0.0);
      // the second zero is -conj(zeta); for GP the closed form makes
      // the symmetry directly checkable
      if (eq.kind() == Kind::GeneralizedPoisson) {
        const Complex other = -std::conj(dp.zeta);
        CHECK(std::abs(k_closed_gp(eq.j(), other) - r * r) < 1e-10);
      }
    }
  }
}

TEST_CASE("warm start changes nothing beyond tolerance") {
  const auto gp2 = RadialEquilibrium::generalized_poisson(2);
  const auto cold = solve_zeta(gp2, 0.15);
  const auto warm = solve_zeta(gp2, 0.15, solve_zeta(gp2, 0.1).delta);
  CHECK(std::abs(cold.zeta - warm.zeta) < 1e-13);
}

TEST_CASE("dispersion zeros agree with the pole polynomial roots") {
  // the Green's-function pole zeta_r and the dispersion zero zeta(r)
  // describe the same object: omega(r) = kappa + i (r - rho) for the
  // root rho + i kappa of Q_j bifurcating from +i
  for (int j : {2, 3}) {
    const auto eq = RadialEquilibrium::generalized_poisson(j);
    for (double r : {0.02, 0.05, 0.1}) {
      const auto dp = solve_zeta(eq, r);
      const Complex root = pk::poles_general(j, r).zeta1();
      const Complex omega_from_poles(root.imag(), r - root.real());
      CHECK(std::abs(dp.omega - omega_from_poles) < 1e-10);
    }
  }
}

TEST_CASE("dissipation bracket holds on the test grid") {
  for (const auto& eq : {RadialEquilibrium::maxwellian(),
                         RadialEquilibrium::generalized_poisson(2)}) {
    for (double r : {0.1, 0.15, 0.2, 0.25}) {
      const auto dp = solve_zeta(eq, r);
      const auto b = dissipation_bracket(eq, dp);
      CHECK(b.lower <= b.omega2);
      CHECK(b.omega2 <= b.upper);
      CHECK(b.omega2 >= 0.0);
    }
  }
}

TEST_CASE("maxwellian damping is gaussian-small in 1/r^2") {
  std::vector<double> x, y;
  const auto mx = RadialEquilibrium::maxwellian();
  for (double r : {0.12, 0.15, 0.2, 0.25}) {
    const auto dp = solve_zeta(mx, r);
    x.push_back(1.0 / (r * r));
    y.push_back(std::log(dp.omega.imag()));
  }
  double sxx = 0, sx = 0, sy = 0, sxy = 0;
  const double n = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope < -0.3);  // log omega2 ~ -1/(2 r^2) + ...
}

TEST_CASE("thin tail expansion fits the bohm-gross order") {
  const auto mx = RadialEquilibrium::maxwellian();
  const auto rep = thin_tail_expansion_check(mx, {0.2, 0.1, 0.05, 0.025});
  CHECK(rep.fitted_exponent >= 3.5);
  CHECK(rep.max_ratio < 10.0);
  CHECK_THROWS_AS(
      thin_tail_expansion_check(RadialEquilibrium::generalized_poisson(1),
                                {0.1, 0.05}),
      TailClassMismatch);
}

TEST_CASE("k derivative agrees with the closed form for GP") {
  const auto gp2 = RadialEquilibrium::generalized_poisson(2);
  const Complex z(6.0, 0.4);
  const Complex h(1e-6, 0.0);
  const Complex fd = (k_closed_gp(2, z + h) - k_closed_gp(2, z - h)) /
                     (2.0 * h);
  CHECK(std::abs(k_derivative(gp2, z) - fd) < 1e-8);
}

TEST_CASE("invalid radius is rejected") {
  auto mx = RadialEquilibrium::maxwellian();
  CHECK_THROWS_AS(solve_zeta(mx, 0.0), DomainError);
  CHECK_THROWS_AS(solve_zeta(mx, -0.1), DomainError);
}

TEST_SUITE_END();
