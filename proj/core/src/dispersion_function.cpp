#include "vplin/dispersion_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "vplin/grid.hpp"
#include "vplin/poisson_kernels.hpp"
#include "vplin/quadrature.hpp"

namespace vplin {

namespace {

constexpr double kPi = std::numbers::pi;

Region classify(Complex z) {
  if (z.imag() < 0.0) return Region::LowerHalf;
  if (z.imag() > 0.0) return Region::UpperHalf;
  return Region::RealAxis;
}

// Real-line integral -int m0'(t)/(z-t) dt, valid off the real axis.
// Breakpoints cluster near Re z where the integrand peaks.
Complex line_integral(const RadialEquilibrium& eq, Complex z) {
  const double T = eq.truncation_radius();
  const double x = z.real();
  auto f = [&](double t) { return eq.m0_deriv(Complex(t, 0.0)) / (z - t); };

  std::vector<double> breaks{-T};
  for (double off : {-1.0, -0.01, 0.01, 1.0}) {
    double p = x + off;
    if (p > -T && p < T) breaks.push_back(p);
  }
  breaks.push_back(T);
  std::sort(breaks.begin(), breaks.end());
  return -quad::integrate_panels(f, breaks, {1e-14, 1e-12});
}

// -PV int m0'(t)/(x-t) dt (the real part of k on the real axis).
double pv_part(const RadialEquilibrium& eq, double x, int deriv_order) {
  const double T = eq.truncation_radius();
  auto f = [&](double t) {
    return eq.m0_deriv(Complex(t, 0.0), deriv_order).real();
  };
  return -quad::pv_cauchy(f, x, std::fabs(x) + T, {1e-14, 1e-12});
}

KValue k_by_quadrature(const RadialEquilibrium& eq, Complex z) {
  KValue kv;
  kv.z = z;
  kv.region = classify(z);
  switch (kv.region) {
    case Region::LowerHalf:
      kv.k = line_integral(eq, z);
      kv.method = KMethod::Quadrature;
      break;
    case Region::RealAxis: {
      double x = z.real();
      kv.k = Complex(pv_part(eq, x, 1),
                     -kPi * eq.m0_deriv(Complex(x, 0.0)).real());
      kv.method = KMethod::PlemeljPV;
      break;
    }
    case Region::UpperHalf:
      kv.k = line_integral(eq, z) -
             Complex(0.0, 2.0 * kPi) * eq.m0_deriv(z);
      kv.method = KMethod::Quadrature;
      break;
  }
  return kv;
}

}  // namespace

Complex k_closed_gp(int j, Complex z) {
  const auto a = pk::kj_coefficients_double(j);
  const Complex w = 1.0 / (1.0 + Complex(0.0, 1.0) * z);
  Complex acc = 0.0;
  for (int p = j - 1; p >= 0; --p) acc = (acc + a[p]) * w;
  return -acc * w;  // -sum a_p w^{p+2}
}

KValue eval_k(const RadialEquilibrium& eq, Complex z) {
  eq.require_in_strip(z, eq.theta_prime());
  if (eq.kind() == Kind::GeneralizedPoisson) {
    KValue kv;
    kv.z = z;
    kv.k = k_closed_gp(eq.j(), z);
    kv.region = classify(z);
    kv.method = KMethod::ClosedForm;
    return kv;
  }
  return k_by_quadrature(eq, z);
}

KValue eval_k_quadrature(const RadialEquilibrium& eq, Complex z) {
  eq.require_in_strip(z, eq.theta_prime());
  return k_by_quadrature(eq, z);
}

KEffValue eval_k_eff(const RadialEquilibrium& eq, Complex z) {
  KValue kv = eval_k(eq, z);
  return {z, kv.k + Complex(0.0, kPi) * eq.m0_deriv(z)};
}

double k_eff_real(const RadialEquilibrium& eq, double x) {
  if (eq.kind() == Kind::GeneralizedPoisson) {
    Complex z(x, 0.0);
    return (k_closed_gp(eq.j(), z) +
            Complex(0.0, kPi) * eq.m0_deriv(z))
        .real();
  }
  return pv_part(eq, x, 1);
}

double k_eff_real_deriv(const RadialEquilibrium& eq, double x, int order) {
  if (order < 1 || order > 2)
    throw DomainError("k_eff_real_deriv: order must be 1 or 2");
  return pv_part(eq, x, order + 1);
}

Complex k_minus_inverse_square(const RadialEquilibrium& eq, Complex z) {
  if (!(z.imag() > 0.0))
    throw DomainError("k_minus_inverse_square: needs Im z > 0");
  if (eq.kind() == Kind::GeneralizedPoisson)
    return k_closed_gp(eq.j(), z) - 1.0 / (z * z);
  // Integrating by parts, k = int m0(t)/(z-t)^2 dt; the unit mass of m0
  // pulls the z^{-2} out of the integral, leaving no cancellation:
  //   k - z^{-2} = int m0(t) t (2z - t) / (z^2 (z-t)^2) dt - 2 i pi m0'(z).
  const double T = eq.truncation_radius();
  const double x = z.real();
  const Complex z2 = z * z;
  auto f = [&](double t) {
    const Complex d = z - t;
    return eq.m0(Complex(t, 0.0)) * t * (2.0 * z - t) / (z2 * d * d);
  };
  std::vector<double> breaks{-T};
  for (double off : {-1.0, -0.01, 0.01, 1.0}) {
    double p = x + off;
    if (p > -T && p < T) breaks.push_back(p);
  }
  breaks.push_back(T);
  std::sort(breaks.begin(), breaks.end());
  const Complex I = quad::integrate_panels(f, breaks, {1e-18, 1e-10});
  return I - Complex(0.0, 2.0 * kPi) * eq.m0_deriv(z);
}

ExpansionReport check_expansion_zero(const RadialEquilibrium& eq,
                                     const std::vector<double>& radii) {
  if (radii.empty()) throw DomainError("check_expansion_zero: empty grid");
  const Complex k0 = eval_k(eq, 0.0).k;
  const double m2 = eq.m0_deriv(0.0, 2).real();

  ExpansionReport rep;
  std::vector<double> lx, ly;
  for (double r : radii) {
    Complex kr = eval_k(eq, Complex(r, 0.0)).k;
    double rem = std::abs(kr - k0 + Complex(0.0, kPi * m2) * r);
    rep.radii.push_back(r);
    rep.remainders.push_back(rem);
    rep.max_ratio = std::max(rep.max_ratio, rem / (r * r));
    lx.push_back(std::log(r));
    ly.push_back(std::log(std::max(rem, 1e-300)));
  }
  auto [slope, icpt] = quad::linear_fit(lx, ly);
  rep.fitted_exponent = slope;
  rep.fitted_log_constant = icpt;
  return rep;
}

ExpansionReport check_expansion_infinity(const RadialEquilibrium& eq,
                                         const std::vector<double>& radii,
                                         InfinityOrder order) {
  if (radii.empty()) throw DomainError("check_expansion_infinity: empty grid");
  if (order == InfinityOrder::ThinTail &&
      eq.tail_class() != TailClass::ThinTail)
    throw TailClassMismatch("thin-tail expansion on a fat-tail equilibrium");
  const double d = eq.decay_order();
  const double a2 = (order == InfinityOrder::ThinTail) ? eq.a2() : 0.0;

  ExpansionReport rep;
  std::vector<double> lx, ly;
  for (double r : radii) {
    const double keff = k_eff_real(eq, r);
    const double zi2 = 1.0 / (r * r);
    double rem, env;
    if (order == InfinityOrder::General) {
      rem = std::fabs(keff - zi2);
      env = std::pow(r, -d - 1.0) + std::pow(r, -4.0);
    } else {
      rem = std::fabs(keff - zi2 - 3.0 * a2 * zi2 * zi2);
      env = std::pow(r, -d - 1.0) + std::pow(r, -6.0) * std::log(r);
    }
    rep.radii.push_back(r);
    rep.remainders.push_back(rem);
    rep.max_ratio = std::max(rep.max_ratio, rem / env);
    lx.push_back(std::log(r));
    ly.push_back(std::log(std::max(rem, 1e-300)));
  }
  auto [slope, icpt] = quad::linear_fit(lx, ly);
  rep.fitted_exponent = slope;
  rep.fitted_log_constant = icpt;
  return rep;
}

double estimate_decay_constant(const RadialEquilibrium& eq,
                               const std::vector<Complex>& grid) {
  double A = 0.0;
  for (Complex z : grid) {
    const double s = 1.0 + std::abs(z);
    A = std::max(A, std::abs(eval_k(eq, z).k) * s * s);
  }
  return A;
}

void write_k_path_csv(const RadialEquilibrium& eq,
                      const std::vector<Complex>& path, std::ostream& os) {
  os << "re_z,im_z,re_k,im_k,region,method\n";
  for (Complex z : path) {
    KValue kv = eval_k(eq, z);
    const char* region = kv.region == Region::LowerHalf   ? "lower"
                         : kv.region == Region::RealAxis ? "real"
                                                         : "upper";
    const char* method = kv.method == KMethod::ClosedForm ? "closed"
                         : kv.method == KMethod::Quadrature
                             ? "quadrature"
                             : "plemelj_pv";
    os << format_double(z.real()) << ',' << format_double(z.imag()) << ','
       << format_double(kv.k.real()) << ',' << format_double(kv.k.imag())
       << ',' << region << ',' << method << '\n';
  }
}

}  // namespace vplin
