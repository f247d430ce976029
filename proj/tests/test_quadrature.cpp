#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "vplin/quadrature.hpp"

using namespace vplin;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("gaussian integral") {
  const double v = quad::integrate([](double x) { return std::exp(-x * x); },
                                   -10.0, 10.0, {1e-14, 1e-13});
  CHECK(std::fabs(v - std::sqrt(std::numbers::pi)) < 1e-13);
}

TEST_CASE("complex-valued integrand") {
  // int_0^1 e^{ix} dx = sin(1) + i(1 - cos(1))
  const auto v = quad::integrate(
      [](double x) { return std::polar(1.0, x); }, 0.0, 1.0, {1e-14, 1e-13});
  CHECK(std::abs(v - std::complex<double>(std::sin(1.0), 1.0 - std::cos(1.0))) <
        1e-13);
}

TEST_CASE("panel splitting matches single panel") {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  const double whole = quad::integrate(f, -4.0, 4.0, {1e-13, 1e-12});
  const double split =
      quad::integrate_panels(f, {-4.0, -1.0, 0.5, 4.0}, {1e-13, 1e-12});
  CHECK(std::fabs(whole - split) < 1e-12);
  CHECK(std::fabs(whole - 2.0 * std::atan(4.0)) < 1e-12);
}

TEST_CASE("half line integration") {
  const double v = quad::integrate_half_line(
      [](double t) { return std::exp(-t); }, 0.0, 60.0, {1e-14, 1e-13});
  CHECK(std::fabs(v - 1.0) < 1e-12);
}

TEST_CASE("principal value of a linear numerator") {
  // PV int_{x-W}^{x+W} t/(x-t) dt = -2W by odd symmetry around x
  const double W = 3.0;
  const double v = quad::pv_cauchy([](double t) { return t; }, 0.7, W,
                                   {1e-14, 1e-13});
  CHECK(std::fabs(v + 2.0 * W) < 1e-12);
}

TEST_CASE("principal value kills constants") {
  const double v = quad::pv_cauchy([](double) { return 1.0; }, -0.3, 2.0,
                                   {1e-14, 1e-13});
  CHECK(std::fabs(v) < 1e-13);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  quad::gauss_legendre(12, x, w);
  REQUIRE(x.size() == 12);
  double m0 = 0.0, m2 = 0.0, m1 = 0.0;
  for (int i = 0; i < 12; ++i) {
    m0 += w[i];
    m1 += w[i] * x[i];
    m2 += w[i] * x[i] * x[i];
  }
  CHECK(std::fabs(m0 - 2.0) < 1e-14);
  CHECK(std::fabs(m1) < 1e-14);
  CHECK(std::fabs(m2 - 2.0 / 3.0) < 1e-14);
}

TEST_CASE("linear fit recovers slope and intercept") {
  std::vector<double> x{0.0, 1.0, 2.0, 3.0}, y;
  for (double xi : x) y.push_back(2.5 * xi - 0.75);
  auto [slope, icpt] = quad::linear_fit(x, y);
  CHECK(std::fabs(slope - 2.5) < 1e-13);
  CHECK(std::fabs(icpt + 0.75) < 1e-13);
}

TEST_CASE("geometric breaks are increasing and span the interval") {
  auto b = quad::geometric_breaks(1e-3, 10.0);
  REQUIRE(b.size() >= 2);
  CHECK(b.front() == doctest::Approx(1e-3));
  CHECK(b.back() == doctest::Approx(10.0));
  for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] < b[i + 1]);
}

TEST_SUITE_END();
