#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "vplin/dispersion_function.hpp"
#include "vplin/equilibrium.hpp"

namespace vplin {

struct PenroseReport {
  std::vector<std::pair<double, Complex>> curve;  // (x, k(x)) samples
  std::vector<std::pair<double, int>> winding;    // probe -> winding number
  bool stable = true;
  bool no_probes = false;
};

/// Winding of the curve k(R) (closed through k(inf) = 0) around each
/// probe x > 0; stable iff every winding number is zero.
PenroseReport penrose_check(const RadialEquilibrium& eq,
                            const std::vector<double>& probes);

struct DispersionPoint {
  double r = 0.0;
  Complex zeta;   // zeta(r) = zeta1 + i zeta2, k(zeta) = r^2
  Complex omega;  // r zeta(r)
  Complex m_l;    // -2r k(zeta)/k'(zeta) - 1
  Complex delta;  // r zeta - 1
  double residual = 0.0;
  int iterations = 0;
};

/// Solves k(zeta(r)) = r^2 for the zero with Re zeta > 0, Im zeta > 0.
/// warm_delta seeds the fixed point from a neighbouring grid point.
DispersionPoint solve_zeta(const RadialEquilibrium& eq, double r,
                           std::optional<Complex> warm_delta = std::nullopt);

/// k'(z) by 64-point trapezoid over a Cauchy circle inside the strip.
Complex k_derivative(const RadialEquilibrium& eq, Complex z);

struct DissipationBracket {
  double lower = 0.0;
  double upper = 0.0;
  double omega2 = 0.0;
};

/// Bracket [-pi m0'(w1/r)/(4r^2), -pi m0'(w1/r)/r^2] for omega2; throws
/// BracketViolation if omega2 falls outside.
DissipationBracket dissipation_bracket(const RadialEquilibrium& eq,
                                       const DispersionPoint& dp);

/// Fits |r zeta(r) - 1 - 3 a2 r^2/2| over the r grid (thin tail only).
ExpansionReport thin_tail_expansion_check(const RadialEquilibrium& eq,
                                          const std::vector<double>& r_grid);

/// Default largest r for the fixed-point regime.
double default_r1(const RadialEquilibrium& eq);

}  // namespace vplin
