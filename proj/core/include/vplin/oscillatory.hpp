#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "vplin/errors.hpp"

namespace vplin::osc {

using Complex = std::complex<double>;

/// Filon-type integrator for \int_a^b f(x) e^{i w x} dx with a smooth,
/// non-oscillatory amplitude f. The amplitude is sampled once at
/// construction (adaptive degree-4 panels); each call to operator()
/// only evaluates the oscillatory moments, so sweeping many frequencies
/// against the same amplitude is cheap. The frequency may be complex
/// with Im w >= 0 (exponentially damped oscillation).
///
/// Panel acceptance: interpolation error <= max(abs_tol / (b - a),
/// rel_tol * local amplitude), so the total quadrature error is about
/// abs_tol + rel_tol * \int |f|.
class FilonIntegrator {
 public:
  FilonIntegrator(const std::function<Complex(double)>& f, double a, double b,
                  double abs_tol = 1e-11, double rel_tol = 1e-12);

  /// \int_a^b f(x) e^{i w x} dx
  Complex operator()(Complex w) const;

  std::size_t panel_count() const { return panels_.size(); }

 private:
  struct Panel {
    double c, h;      // x = c + h t, t in [-1, 1]
    Complex coef[5];  // monomial coefficients of the amplitude interpolant
  };
  std::vector<Panel> panels_;

  void build(const std::function<Complex(double)>& f, double a, double b,
             double tol_per_len, double rel_tol, int depth);
};

/// Left-anchored monomial moments nu_k(w) = \int_{-1}^1 t^k e^{i w (t+1)} dt,
/// k = 0..4; bounded for Im w >= 0.
void filon_moments(Complex w, Complex nu[5]);

}  // namespace vplin::osc
