#include "vplin/greens_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vplin/dispersion_function.hpp"
#include "vplin/poisson_kernels.hpp"
#include "vplin/quadrature.hpp"

namespace vplin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

double amplitude_cutoff(const RadialEquilibrium& eq) {
  // Fat tails leave an O(x^{-3}) amplitude; thin tails O(x^{-4}).
  return eq.decay_order() < 3.0 ? 5000.0 : 1500.0;
}

double ray_cutoff(const RadialEquilibrium& eq) {
  return eq.decay_order() < 3.0 ? 1e5 : 2500.0;
}

// f(z) = k/(r^2 - k) on the inversion line.
Complex f_of(const RadialEquilibrium& eq, double r, Complex z) {
  Complex k = eval_k(eq, z).k;
  return k / (r * r - k);
}

// psi(z) = 1/(r^2 (1+z^2)): same x^{-2} tail as f, with the known
// transform int psi e^{ixs} dx = (pi/r^2) e^{-s} (pole at i).
Complex psi_of(double r, Complex z) {
  return 1.0 / (r * r * (1.0 + z * z));
}

// Q(r, z) of the low-frequency ray integral: the double subtraction
// that removes both the x^{-2} tail and the free pole at z = 1/r.
Complex q_of(const RadialEquilibrium& eq, double r, Complex z) {
  const Complex diff = k_minus_inverse_square(eq, z);  // k - z^{-2}
  const Complex a = r * r - 1.0 / (z * z);
  return r * r * diff / ((a - diff) * a);
}

}  // namespace

GreensValue greens_closed_form(int j, double xi_abs, double tau) {
  if (tau < 0.0) throw DomainError("greens_closed_form: tau must be >= 0");
  const double r = xi_abs;
  GreensValue gv;
  gv.xi_abs = r;
  gv.tau = tau;
  GreensValue::Split split;
  switch (j) {
    case 1:
      split.oscillatory = -std::exp(-r * tau) * std::sin(tau);
      split.error = 0.0;
      break;
    case 2: {
      auto ps = pk::poles_j2(xi_abs);
      split.error = 2.0 * ps.alpha * std::exp(-(2.0 * ps.rho + r) * tau);
      split.oscillatory =
          -2.0 * std::exp(-(r - ps.rho) * tau) *
          (Complex(ps.alpha, ps.beta) * std::exp(kI * (ps.kappa * tau)))
              .real();
      break;
    }
    case 3: {
      auto ps = pk::poles_j3(xi_abs);
      split.oscillatory =
          -2.0 * std::exp(-(r - ps.rho) * tau) *
          (Complex(ps.a, ps.b) * std::exp(kI * (ps.kappa1 * tau))).real();
      split.error =
          -2.0 * std::exp(-(ps.rho + r) * tau) *
          (Complex(-ps.a, ps.d) * std::exp(kI * (ps.kappa3 * tau))).real();
      break;
    }
    default:
      throw DomainError("greens_closed_form: explicit pole algebra only for j <= 3");
  }
  gv.smooth = split.oscillatory + split.error;
  gv.decomposition = split;
  return gv;
}

GreensValue greens_poles(int j, double xi_abs, double tau) {
  if (tau < 0.0) throw DomainError("greens_poles: tau must be >= 0");
  auto ps = pk::poles_general(j, xi_abs);
  const double r = xi_abs;
  double max_im = 0.0;
  for (const Complex& z : ps.roots) max_im = std::max(max_im, z.imag());

  Complex osc = 0.0, err = 0.0;
  for (std::size_t i = 0; i < ps.roots.size(); ++i) {
    Complex term =
        ps.residues[i] * std::exp(-(r - ps.roots[i]) * tau);
    if (std::fabs(std::fabs(ps.roots[i].imag()) - max_im) < 1e-12)
      osc += term;
    else
      err += term;
  }
  GreensValue gv;
  gv.xi_abs = r;
  gv.tau = tau;
  gv.smooth = (osc + err).real();
  gv.decomposition = GreensValue::Split{osc.real(), err.real()};
  return gv;
}

namespace {

// Winding number of r^2 - k(z) along the boundary of the rectangle
// [-X, X] x [0, gamma]; zero iff the shift to Im z = gamma is legal.
int winding_rectangle(const RadialEquilibrium& eq, double r, double gamma,
                      double X) {
  auto fval = [&](Complex z) { return r * r - eval_k(eq, z).k; };
  long budget = 8000;
  std::function<double(Complex, Complex, Complex, Complex, int)> walk =
      [&](Complex z1, Complex z2, Complex w1, Complex w2, int depth) -> double {
    double da = std::arg(w2 / w1);
    // the chord condition guards against stepping clean over a loop of
    // the image curve near a zero close to the contour
    if (std::fabs(da) <= kPi / 4.0 && depth >= 2 &&
        std::abs(w2 - w1) <= 0.1 * std::min(std::abs(w1), std::abs(w2)))
      return da;
    if (depth >= 26 || --budget <= 0)
      throw UnderResolvedCurve("winding check: refinement budget exceeded");
    Complex zm = 0.5 * (z1 + z2);
    Complex wm = fval(zm);
    return walk(z1, zm, w1, wm, depth + 1) + walk(zm, z2, wm, w2, depth + 1);
  };

  const Complex corners[5] = {{-X, 0.0}, {X, 0.0}, {X, gamma},
                              {-X, gamma}, {-X, 0.0}};
  double total = 0.0;
  for (int s = 0; s < 4; ++s) {
    Complex z1 = corners[s], z2 = corners[s + 1];
    total += walk(z1, z2, fval(z1), fval(z2), 0);
  }
  return int(std::lround(total / (2.0 * kPi)));
}

}  // namespace

double find_gamma0(const RadialEquilibrium& eq, double xi_abs) {
  const double r = xi_abs;
  const double X = std::max(10.0, 4.0 / r);
  const double cap = 0.9 * eq.theta_prime();
  auto valid = [&](double g) {
    try {
      return winding_rectangle(eq, r, g, X) == 0;
    } catch (const UnderResolvedCurve&) {
      return false;  // a zero hugging the boundary counts as invalid
    }
  };
  if (valid(cap)) return 0.95 * cap;
  double lo = 0.0, hi = cap;
  for (int it = 0; it < 12; ++it) {
    double mid = 0.5 * (lo + hi);
    (valid(mid) ? lo : hi) = mid;
  }
  if (lo <= 0.0) throw ContourTooHigh("find_gamma0: no valid shift found");
  // back off from the obstruction: the amplitude has a pole just above
  // the validated shift and the contour must stay well clear of it
  return 0.5 * lo;
}

GreensRealLine::GreensRealLine(const RadialEquilibrium& eq, double xi_abs)
    : r_(xi_abs),
      // quadrature-evaluated k carries a noise floor the amplitude
      // interpolation cannot beat; only closed forms get the tight goal
      filon_(
          [&eq, xi_abs](double x) {
            Complex z(x, 0.0);
            return f_of(eq, xi_abs, z) - psi_of(xi_abs, z);
          },
          0.0, amplitude_cutoff(eq),
          eq.kind() == Kind::GeneralizedPoisson ? 1e-11 : 1e-8,
          eq.kind() == Kind::GeneralizedPoisson ? 1e-12 : 1e-9) {
  if (!(xi_abs > 0.0)) throw DomainError("GreensRealLine: xi_abs must be > 0");
}

GreensValue GreensRealLine::operator()(double tau) const {
  if (tau < 0.0) throw DomainError("tau must be >= 0");
  const double s = r_ * tau;
  GreensValue gv;
  gv.xi_abs = r_;
  gv.tau = tau;
  gv.smooth = (r_ / kPi) * filon_(Complex(s, 0.0)).real() +
              std::exp(-s) / (2.0 * r_);
  return gv;
}

GreensContourHigh::GreensContourHigh(const RadialEquilibrium& eq,
                                     double xi_abs, double gamma0)
    : r_(xi_abs),
      gamma0_(gamma0),
      filon_(
          [&eq, xi_abs, gamma0](double x) {
            Complex z(x, gamma0);
            return f_of(eq, xi_abs, z) - psi_of(xi_abs, z);
          },
          0.0, amplitude_cutoff(eq), 1e-11, 1e-12) {
  if (!(gamma0 > 0.0) || gamma0 >= 1.0)
    throw DomainError("GreensContourHigh: need 0 < gamma0 < 1");
}

GreensValue GreensContourHigh::operator()(double tau) const {
  if (tau < 0.0) throw DomainError("tau must be >= 0");
  const double s = r_ * tau;
  GreensValue gv;
  gv.xi_abs = r_;
  gv.tau = tau;
  gv.smooth = (r_ / kPi) * std::exp(-gamma0_ * s) *
                  filon_(Complex(s, 0.0)).real() +
              std::exp(-s) / (2.0 * r_);
  return gv;
}

double GreensContourHigh::envelope_ratio(double tau) const {
  const double s = r_ * tau;
  return std::fabs((*this)(tau).smooth) * r_ * std::exp(gamma0_ * s);
}

GreensContourLow::GreensContourLow(const RadialEquilibrium& eq, double xi_abs,
                                   const DispersionPoint& dp, double gamma1)
    : r_(xi_abs),
      gamma1_(gamma1),
      d_(eq.decay_order()),
      one_plus_ml_(1.0 + dp.m_l),
      omega_(dp.omega),
      filon_(
          [&eq, xi_abs, gamma1](double x) {
            Complex z = x * Complex(1.0, gamma1) + Complex(0.0, gamma1);
            return q_of(eq, xi_abs, z);
          },
          0.0, ray_cutoff(eq), 1e-11, 1e-12) {
  if (std::fabs(dp.r - xi_abs) > 1e-12)
    throw MissingDispersionPoint("GreensContourLow: dispersion point at wrong r");
  if (!(gamma1 > 0.0))
    throw DomainError("GreensContourLow: gamma1 must be > 0");
  if (gamma1 * (1.0 + dp.zeta.real()) <= dp.zeta.imag())
    throw ContourTooHigh("GreensContourLow: rays pass below the dispersion zero");
}

GreensValue GreensContourLow::operator()(double tau) const {
  if (tau < 0.0) throw DomainError("tau must be >= 0");
  const double s = r_ * tau;
  GreensValue gv;
  gv.xi_abs = r_;
  gv.tau = tau;
  GreensValue::Split split;
  split.oscillatory = (kI * one_plus_ml_ * std::exp(kI * omega_ * tau)).real();
  const Complex w = Complex(1.0, gamma1_) * s;
  split.error = (r_ / kPi) * std::exp(-gamma1_ * s) *
                (Complex(1.0, gamma1_) * filon_(w)).real();
  gv.decomposition = split;
  gv.smooth = split.oscillatory + split.error;
  return gv;
}

double GreensContourLow::envelope_ratio(double tau) const {
  GreensValue gv = (*this)(tau);
  const double env = r_ * r_ * std::log(1.0 / r_) + std::pow(r_, d_ - 1.0);
  return std::fabs(gv.decomposition->error) * std::exp(gamma1_ * r_ * tau) /
         env;
}

double default_gamma1(const RadialEquilibrium& eq, double xi_abs,
                      const DispersionPoint& dp) {
  double g = eq.theta_prime() / 4.0;
  const double need =
      1.2 * dp.zeta.imag() / (1.0 + dp.zeta.real());
  if (g <= need) g = std::min(1.5 * need, 0.9 * eq.theta_prime());
  if (g * (1.0 + dp.zeta.real()) <= dp.zeta.imag())
    throw ContourTooHigh("default_gamma1: cannot clear the dispersion zero");
  (void)xi_abs;
  return g;
}

IdentityReport normal_form_identity_check(
    double xi_abs, const std::function<double(double)>& phi,
    const std::function<double(double)>& phi_prime, double t_max,
    double tol) {
  const double r = xi_abs;
  auto lhs_f = [&](double t) {
    return -std::exp(-r * t) * std::sin(t) * phi(t);
  };
  auto rhs_f = [&](double t) {
    return -std::exp(-r * t) * std::cos(t) * (phi_prime(t) - r * phi(t));
  };
  IdentityReport rep;
  rep.lhs = phi(0.0) + quad::integrate(lhs_f, 0.0, t_max, {1e-12, 1e-10});
  rep.rhs = quad::integrate(rhs_f, 0.0, t_max, {1e-12, 1e-10});
  rep.diff = std::fabs(rep.lhs - rep.rhs);
  if (rep.diff > tol)
    throw IdentityViolation("normal-form identity residual exceeds tolerance");
  return rep;
}

}  // namespace vplin
