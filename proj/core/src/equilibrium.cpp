#include "vplin/equilibrium.hpp"

#include <cmath>
#include <numbers>

#include "vplin/poisson_kernels.hpp"
#include "vplin/quadrature.hpp"

namespace vplin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrtPi = 0.5641895835477562869480794515608;

// int (1+t^2)^{-j} dt = pi (2j-2)! / (4^{j-1} ((j-1)!)^2)
double gp_mass(int j) {
  double v = kPi;
  // (2j-2)!/((j-1)!)^2 = C(2j-2, j-1); build incrementally over 4.
  for (int i = 1; i < j; ++i) v *= (2.0 * i - 1.0) / (2.0 * i);
  return v;
}

}  // namespace

RadialEquilibrium RadialEquilibrium::maxwellian() {
  RadialEquilibrium eq;
  eq.kind_ = Kind::Maxwellian;
  eq.theta_ = kPi / 4.0;
  eq.theta_prime_ = eq.theta_ / 2.0;
  eq.d_ = 10.0;  // entire function; bound order used for sampled envelopes
  eq.tail_ = TailClass::ThinTail;
  return eq;
}

RadialEquilibrium RadialEquilibrium::generalized_poisson(int j) {
  if (j < 1) throw DomainError("generalized_poisson: j must be >= 1");
  RadialEquilibrium eq;
  eq.kind_ = Kind::GeneralizedPoisson;
  eq.j_ = j;
  eq.theta_ = std::min(kPi / 4.0, 0.5);
  eq.theta_prime_ = eq.theta_ / 2.0;
  eq.d_ = 2.0 * j;
  eq.tail_ = (j == 1) ? TailClass::FatTail : TailClass::ThinTail;
  eq.cprime_ = 1.0 / gp_mass(j);
  return eq;
}

RadialEquilibrium RadialEquilibrium::custom(
    std::function<Complex(Complex)> m0, double theta, double d) {
  if (!(theta > 0.0) || theta > kPi / 4.0)
    throw DomainError("custom: theta must lie in (0, pi/4]");
  if (!(d > 1.0)) throw DomainError("custom: decay order d must be > 1");
  RadialEquilibrium eq;
  eq.kind_ = Kind::Custom;
  eq.theta_ = theta;
  eq.theta_prime_ = theta / 2.0;
  eq.d_ = d;
  eq.tail_ = (d > 3.0) ? TailClass::ThinTail : TailClass::FatTail;
  eq.custom_m0_ = std::move(m0);
  return eq;
}

std::string RadialEquilibrium::name() const {
  switch (kind_) {
    case Kind::Maxwellian:
      return "maxwellian";
    case Kind::GeneralizedPoisson:
      return "gp" + std::to_string(j_);
    default:
      return "custom";
  }
}

bool RadialEquilibrium::in_strip(Complex z, double width) const {
  return std::fabs(z.imag()) < width * (1.0 + std::fabs(z.real()));
}

void RadialEquilibrium::require_in_strip(Complex z, double width) const {
  if (!in_strip(z, width))
    throw DomainError("evaluation point outside the analyticity strip");
}

Complex RadialEquilibrium::m0(Complex z) const {
  require_in_strip(z, theta_);
  switch (kind_) {
    case Kind::Maxwellian:
      return kInvSqrtPi * std::exp(-z * z);
    case Kind::GeneralizedPoisson: {
      Complex w = 1.0 + z * z;
      if (std::abs(w) < 1e-12)
        throw PoleError("generalized Poisson m0: z^2 = -1");
      return cprime_ * std::pow(w, -j_);
    }
    default:
      return custom_m0_(z);
  }
}

Complex RadialEquilibrium::m0_deriv(Complex z, int order) const {
  if (order < 1 || order > 3)
    throw DomainError("m0_deriv: order must be in 1..3");
  require_in_strip(z, theta_);
  switch (kind_) {
    case Kind::Maxwellian: {
      Complex m = kInvSqrtPi * std::exp(-z * z);
      if (order == 1) return -2.0 * z * m;
      if (order == 2) return (4.0 * z * z - 2.0) * m;
      return (-8.0 * z * z * z + 12.0 * z) * m;
    }
    case Kind::GeneralizedPoisson: {
      const double j = j_;
      Complex w = 1.0 + z * z;
      if (std::abs(w) < 1e-12)
        throw PoleError("generalized Poisson m0: z^2 = -1");
      if (order == 1) return -2.0 * j * cprime_ * z * std::pow(w, -j_ - 1);
      if (order == 2)
        return -2.0 * j * cprime_ *
               (std::pow(w, -j_ - 1) -
                2.0 * (j + 1.0) * z * z * std::pow(w, -j_ - 2));
      return -2.0 * j * (j + 1.0) * cprime_ *
             (-6.0 * z * std::pow(w, -j_ - 2) +
              4.0 * (j + 2.0) * z * z * z * std::pow(w, -j_ - 3));
    }
    default: {
      // Cauchy-circle differentiation; radius limited by the strip.
      double margin = theta_ * (1.0 + std::fabs(z.real())) - std::fabs(z.imag());
      double r = std::min(0.1, margin) / 2.0;
      if (!(r > 0.0)) throw DomainError("m0_deriv: no room inside strip");
      const int n = 64;
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) {
        double ang = 2.0 * kPi * k / n;
        Complex e = std::polar(1.0, ang);
        acc += custom_m0_(z + r * e) * std::polar(1.0, -order * ang);
      }
      double fact = (order == 1) ? 1.0 : (order == 2 ? 2.0 : 6.0);
      return fact * acc / (double(n) * std::pow(r, order));
    }
  }
}

double RadialEquilibrium::m0_hat(double s) const {
  const double as = std::fabs(s);
  switch (kind_) {
    case Kind::Maxwellian:
      return std::exp(-s * s / 4.0);
    case Kind::GeneralizedPoisson: {
      auto d = pk::qj_coefficients_double(j_);
      double q = 0.0;
      for (int p = int(d.size()) - 1; p >= 0; --p) q = q * as + d[p];
      return q * std::exp(-as) / d[0];
    }
    default: {
      const double T = truncation_radius();
      auto f = [&](double t) {
        return custom_m0_(Complex(t, 0.0)).real() * std::cos(t * as);
      };
      // even integrand: twice the half-line integral
      return 2.0 * quad::integrate_half_line(f, 0.0, T, {1e-11, 1e-9});
    }
  }
}

double RadialEquilibrium::moment(int order) const {
  if (order < 0) throw DomainError("moment: order must be >= 0");
  if (order % 2 == 1) return 0.0;
  const int n = order / 2;
  switch (kind_) {
    case Kind::Maxwellian: {
      // (2n-1)!! / 2^n
      double v = 1.0;
      for (int i = 1; i <= n; ++i) v *= (2.0 * i - 1.0) / 2.0;
      return v;
    }
    case Kind::GeneralizedPoisson: {
      if (order >= 2 * j_ - 1)
        throw DivergentMoment("moment: order >= d - 1 for GP(j)");
      // Gamma(n+1/2) Gamma(j-n-1/2) / (Gamma(1/2) Gamma(j-1/2))
      return std::exp(std::lgamma(n + 0.5) + std::lgamma(j_ - n - 0.5) -
                      std::lgamma(0.5) - std::lgamma(j_ - 0.5));
    }
    default: {
      if (order >= d_ - 1.0)
        throw DivergentMoment("moment: order >= d - 1");
      const double T = truncation_radius();
      auto f = [&](double t) {
        return std::pow(t, order) * custom_m0_(Complex(t, 0.0)).real();
      };
      return 2.0 * quad::integrate_half_line(f, 0.0, T, {1e-11, 1e-9});
    }
  }
}

double RadialEquilibrium::truncation_radius() const {
  if (kind_ == Kind::Maxwellian) return 7.5;
  return std::pow(1e14, 1.0 / (d_ + 1.0)) - 1.0;
}

}  // namespace vplin
