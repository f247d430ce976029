#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vplin/dispersion_relation.hpp"
#include "vplin/equilibrium.hpp"
#include "vplin/oscillatory.hpp"

namespace vplin {

/// One sample of the per-mode Green's function
///   G_hat(xi, tau) = delta_coeff * delta_0(tau) + smooth(tau) 1_{tau>=0}.
/// The delta mass is carried symbolically and never discretized.
struct GreensValue {
  double xi_abs = 0.0;
  double tau = 0.0;
  double delta_coeff = 1.0;
  double smooth = 0.0;
  struct Split {
    double oscillatory = 0.0;
    double error = 0.0;
  };
  std::optional<Split> decomposition;
};

/// Closed form for the generalized Poisson family, j = 1, 2, 3
/// (explicit pole pairs). The dominant oscillatory pair populates
/// decomposition.oscillatory; the remaining terms go to .error.
GreensValue greens_closed_form(int j, double xi_abs, double tau);

/// Residue form for any j (partial fractions over the pole set); equals
/// the closed form for j <= 3.
GreensValue greens_poles(int j, double xi_abs, double tau);

/// Largest validated shift gamma0 (in theta/|xi| units) such that
/// r^2 - k has no zero between the real axis and the shifted line,
/// found by bisection on an argument-principle winding check.
double find_gamma0(const RadialEquilibrium& eq, double xi_abs);

/// Direct quadrature of the inversion integral along the real line,
/// with the slowly decaying tail subtracted analytically. The amplitude
/// is sampled once per (eq, xi); evaluation per tau is cheap.
class GreensRealLine {
 public:
  GreensRealLine(const RadialEquilibrium& eq, double xi_abs);
  GreensValue operator()(double tau) const;

 private:
  double r_;
  osc::FilonIntegrator filon_;
};

/// High-frequency evaluation along the shifted line Im z = gamma0; the
/// exponential decay e^{-gamma0 tau |xi|} is factored out analytically.
class GreensContourHigh {
 public:
  GreensContourHigh(const RadialEquilibrium& eq, double xi_abs,
                    double gamma0);
  GreensValue operator()(double tau) const;
  double gamma0() const { return gamma0_; }
  /// |smooth| * |xi| * e^{gamma0 tau |xi|} — bounded iff the high-
  /// frequency envelope of the main theorem holds.
  double envelope_ratio(double tau) const;

 private:
  double r_, gamma0_;
  osc::FilonIntegrator filon_;
};

/// Low-frequency evaluation: residue pair at omega(r) (oscillatory)
/// plus the ray integral over Gamma_{gamma1} (error term).
class GreensContourLow {
 public:
  GreensContourLow(const RadialEquilibrium& eq, double xi_abs,
                   const DispersionPoint& dp, double gamma1);
  GreensValue operator()(double tau) const;
  double gamma1() const { return gamma1_; }
  /// |error| e^{gamma1 tau r} / (r^2 log(1/r) + r^{d-1}).
  double envelope_ratio(double tau) const;

 private:
  double r_, gamma1_, d_;
  Complex one_plus_ml_;
  Complex omega_;
  osc::FilonIntegrator filon_;
};

/// Default ray slope: min(theta'/4, margin required to pass above the
/// dispersion zeros).
double default_gamma1(const RadialEquilibrium& eq, double xi_abs,
                      const DispersionPoint& dp);

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double diff = 0.0;
};

/// Distributional identity for the Poisson (j = 1) Green's function:
/// integrating G_hat_1 against a test function phi equals
/// -int e^{-tau |xi|} cos(tau) [phi'(tau) - |xi| phi(tau)] dtau.
/// phi and phi' are supplied as callbacks supported in [0, t_max].
IdentityReport normal_form_identity_check(
    double xi_abs, const std::function<double(double)>& phi,
    const std::function<double(double)>& phi_prime, double t_max,
    double tol = 1e-8);

}  // namespace vplin
