#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "vplin/equilibrium.hpp"

namespace vplin {

enum class Region { LowerHalf, RealAxis, UpperHalf };
enum class KMethod { ClosedForm, Quadrature, PlemeljPV };

struct KValue {
  Complex z;
  Complex k;
  Region region;
  KMethod method;
};

struct KEffValue {
  Complex z;
  Complex k_eff;
};

struct ExpansionReport {
  double fitted_exponent = 0.0;
  double fitted_log_constant = 0.0;
  double max_ratio = 0.0;  // remainder / envelope, max over grid
  std::vector<double> radii;
  std::vector<double> remainders;
};

/// Closed form for the generalized Poisson family:
/// k_j(z) = -sum_{p<j} a_p^{(j)} (1+iz)^{-p-2}.
Complex k_closed_gp(int j, Complex z);

/// The plasma dispersion function k(z) on the strip, holomorphic
/// continuation across the real axis (three-branch formula). Uses the
/// closed form for generalized Poisson equilibria, quadrature otherwise.
KValue eval_k(const RadialEquilibrium& eq, Complex z);

/// Same, but always through quadrature (the independent oracle).
KValue eval_k_quadrature(const RadialEquilibrium& eq, Complex z);

/// k_eff(z) = k(z) + i pi m0'(z): analytic, even, real on the real axis.
KEffValue eval_k_eff(const RadialEquilibrium& eq, Complex z);

/// k_eff on the real axis by principal-value quadrature (exactly real).
double k_eff_real(const RadialEquilibrium& eq, double x);

/// d^order/dx^order k_eff on the real axis, order in 1..2.
double k_eff_real_deriv(const RadialEquilibrium& eq, double x, int order = 1);

/// Fits |k(z) - k(0) + i pi m0''(0) z| ~ C |z|^p on the radius grid.
ExpansionReport check_expansion_zero(const RadialEquilibrium& eq,
                                     const std::vector<double>& radii);

enum class InfinityOrder { General, ThinTail };

/// Checks the large-|z| expansion of k_eff against the bound envelope
/// (General: |z|^{-d-1} + |z|^{-4}; ThinTail: |z|^{-d-1} + |z|^{-6} log|z|).
ExpansionReport check_expansion_infinity(const RadialEquilibrium& eq,
                                         const std::vector<double>& radii,
                                         InfinityOrder order);

/// k(z) - z^{-2} for Im z > 0 without subtractive cancellation (single
/// quadrature of the difference; the tail of the inversion amplitudes).
Complex k_minus_inverse_square(const RadialEquilibrium& eq, Complex z);

/// Empirical constant A with |k(z)| <= A (1+|z|)^{-2} over the sample grid.
double estimate_decay_constant(const RadialEquilibrium& eq,
                               const std::vector<Complex>& grid);

/// CSV rows (re_z, im_z, re_k, im_k, region, method) along a path.
void write_k_path_csv(const RadialEquilibrium& eq,
                      const std::vector<Complex>& path, std::ostream& os);

}  // namespace vplin
