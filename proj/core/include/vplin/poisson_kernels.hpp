#pragma once

#include <complex>
#include <vector>

#include "vplin/errors.hpp"
#include "vplin/rational.hpp"

namespace vplin::pk {

using Complex = std::complex<double>;

/// Coefficients a_p^{(j)}, p = 0..j-1, of the explicit kernel
///   K_j(xi, theta) = -z^{-2} sum_p a_p^{(j)} (|xi|/(iz))^p,  z = theta - i|xi|,
/// built by the exact recursion through the normalizers N^{(j)}.
struct KjCoefficients {
  int j;
  std::vector<Rational> a;
  Rational N;  // N^{(j)}; N^{(1)} conventionally 1
};

/// Coefficients d_p^{(j)}, p = 0..j-1, of the polynomial Q_j with
///   m_hat_j(s) = Q_j(|s|) e^{-|s|} / Q_j(0).
struct QjPolynomial {
  int j;
  std::vector<Rational> d;
};

KjCoefficients kj_coefficients(int j);
QjPolynomial qj_polynomial(int j);

/// a_p^{(j)} as doubles.
std::vector<double> kj_coefficients_double(int j);
/// d_p^{(j)} as doubles.
std::vector<double> qj_coefficients_double(int j);

/// Poles of the per-mode Green's function for the generalized Poisson
/// family: roots of P_j(zeta) = zeta^{j+1} + sum_p a_p^{(j)} |xi|^p
/// zeta^{j-1-p} in the zeta = |xi| + i theta coordinate, together with
/// the partial-fraction residues c_r such that the smooth part of
/// G_hat is sum_r c_r e^{-(|xi| - zeta_r) tau}.
struct PoleSet {
  int j = 0;
  double xi_abs = 0.0;
  std::vector<Complex> roots;
  std::vector<Complex> residues;

  // Named quantities for j = 2 (rho, kappa, alpha, beta) and j = 3
  // (rho, kappa1, kappa3, a, b, c, d). Zero when not applicable.
  double rho = 0.0;
  double kappa = 0.0, alpha = 0.0, beta = 0.0;
  double kappa1 = 0.0, kappa3 = 0.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  /// Root with the largest imaginary part (the branch bifurcating from i).
  Complex zeta1() const;
};

PoleSet poles_j2(double xi_abs);
PoleSet poles_j3(double xi_abs);
PoleSet poles_general(int j, double xi_abs);

/// P_j(zeta) evaluated from the exact coefficients.
Complex pole_polynomial(int j, double xi_abs, Complex zeta);

}  // namespace vplin::pk
