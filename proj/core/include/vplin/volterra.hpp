#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "vplin/equilibrium.hpp"

namespace vplin {

/// Discretized per-mode density and forcing on a uniform time mesh.
struct VolterraGrid {
  std::array<double, 3> xi{0.0, 0.0, 0.0};
  double t_max = 0.0;
  int n_steps = 0;
  std::vector<Complex> rho_hat;
  std::vector<Complex> h_hat;

  double xi_abs() const;
  double dt() const { return n_steps > 0 ? t_max / n_steps : 0.0; }
  std::vector<double> times() const;
};

/// Radial Gaussian bump g(x) = exp(-|x|^2 / (2 sigma^2)).
struct SpatialProfile {
  double sigma = 1.0;
  double value(double x_abs) const;
  /// (2 pi)^{3/2} sigma^3 exp(-sigma^2 r^2 / 2)
  double hat(double xi_abs) const;
};

/// Radial velocity profile q(|v|), unit mass.
struct VelocityProfile {
  enum class Family { Gaussian, Equilibrium };
  Family family = Family::Gaussian;
  double sigma = 1.0;  // Gaussian: pi^{-3/2} sigma^{-3} exp(-|v|^2/sigma^2)
  int j = 1;           // Equilibrium: the generalized Poisson profile

  double value(double v_abs) const;
  /// 1D marginal of the 3D profile along a fixed direction.
  double marginal(double u) const;
  /// Fourier transform of the marginal (real, even).
  double hat_reduced(double s) const;
  /// Radius beyond which the marginal is negligible.
  double support() const;
};

struct FreeStreamingData {
  SpatialProfile g;
  VelocityProfile q;
};

/// Forcing for the per-mode equation: either a separable free-streaming
/// initial datum f0(x,v) = g(x) q(|v|), or a direct callback t -> h_hat.
class ForcingSpec {
 public:
  static ForcingSpec free_streaming(SpatialProfile g, VelocityProfile q);
  static ForcingSpec synthetic(std::function<Complex(double)> h_hat);

  bool separable() const { return fs_.has_value(); }
  const FreeStreamingData& data() const;  // throws NonSeparable
  Complex h_hat(double xi_abs, double t) const;

 private:
  std::optional<FreeStreamingData> fs_;
  std::function<Complex(double)> h_;
};

/// Explicit product-trapezoid march for
///   rho(t) + int_0^t (t - tau) m_hat((t - tau)|xi|) rho(tau) dtau = h(t).
/// The kernel vanishes at tau = t, so no linear solve is needed.
/// kernel_off short-circuits the memory term (rho = h identically).
VolterraGrid solve_volterra(const RadialEquilibrium& eq,
                            const ForcingSpec& forcing,
                            const std::array<double, 3>& xi, double t_max,
                            int n_steps, bool kernel_off = false);

/// rho_n = h_n + dt * sum_m w_m smooth(t_n - t_m) h_m (trapezoid weights),
/// with the delta part of the Green's function contributing h_n itself.
/// smooth is sampled on the same mesh as h; size mismatch throws
/// MeshMismatch.
std::vector<Complex> greens_convolution(const std::vector<double>& smooth,
                                        const std::vector<Complex>& h_hat,
                                        double dt);

/// Convenience overload sampling the smooth part on the mesh of h.
std::vector<Complex> greens_convolution(
    const std::function<double(double)>& smooth,
    const std::vector<Complex>& h_hat, double dt);

/// h_hat(xi, t) = g_hat(|xi|) q_red(t |xi|) for separable f0.
std::vector<Complex> free_streaming_forcing(const FreeStreamingData& f0,
                                            const std::vector<double>& t_grid,
                                            const std::array<double, 3>& xi);

struct DecayReport {
  std::vector<double> times;
  std::vector<double> sup_h;       // sup_x |h(x, t)| by 3D quadrature
  double fitted_exponent = 0.0;    // sup_h ~ t^{-fitted_exponent}
  double fitted_log_constant = 0.0;
};

/// Fits the sup-norm decay of h(x,t) = int g(x - tv) q(|v|) dv; the
/// integral is evaluated in the y = x - tv variable so the Gaussian
/// factor keeps its width at large t.
DecayReport forcing_decay_report(const FreeStreamingData& f0,
                                 const std::vector<double>& times);

/// Separable phase-space forcing h_hat(xi, v, t) = amplitude * q(|v|) c(t)
/// at a fixed xi, reduced to its 1D u-marginal (u = <v,xi>/|xi|).
/// c_prime may be empty; it is then replaced by fourth-order finite
/// differences of c on the time grid.
struct SeparableH {
  Complex amplitude{1.0, 0.0};
  std::function<double(double)> marginal;
  double support = 8.0;
  std::function<double(double)> c;
  std::function<double(double)> c_prime;
};

struct RepresentationResult {
  std::vector<Complex> rho_I, rho_II, rho_volterra;
  double diff_I_II = 0.0;
  double diff_I_volterra = 0.0;
  double diff_II_volterra = 0.0;
  bool small_denominator_warning = false;
  int quad_points = 0;
};

/// The two closed-form representations of the density for the regular
/// Poisson equilibrium (j = 1), plus the direct Volterra solve of the
/// same mode for cross-validation. t_grid must be uniform from 0.
RepresentationResult poisson_representations(const SeparableH& h,
                                             double xi_abs,
                                             const std::vector<double>& t_grid);

}  // namespace vplin
