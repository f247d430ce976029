#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "vplin/errors.hpp"

namespace vplin {

using Complex = std::complex<double>;

enum class Kind { Maxwellian, GeneralizedPoisson, Custom };
enum class TailClass { ThinTail, FatTail };

/// A radial equilibrium through its reduced (1D marginal) distribution
/// m0, analytic on the strip D_theta = { |Im z| < theta (1 + |Re z|) },
/// even, positive, normalized to integral 1, with |m0| <~ (1+|z|)^{-d}.
class RadialEquilibrium {
 public:
  static RadialEquilibrium maxwellian();
  static RadialEquilibrium generalized_poisson(int j);
  /// Custom equilibria supply an analytic callback plus declared
  /// (theta, d); only sampled invariants are checked, not analyticity.
  static RadialEquilibrium custom(std::function<Complex(Complex)> m0,
                                  double theta, double d);

  Kind kind() const { return kind_; }
  int j() const { return j_; }
  double theta() const { return theta_; }
  double theta_prime() const { return theta_prime_; }
  void set_theta_prime(double tp) { theta_prime_ = tp; }
  double decay_order() const { return d_; }
  TailClass tail_class() const { return tail_; }
  std::string name() const;

  bool in_strip(Complex z, double width) const;
  void require_in_strip(Complex z, double width) const;

  /// m0(z) on the strip.
  Complex m0(Complex z) const;
  /// d^order/dz^order m0(z), order in 1..3 (Cauchy circle for Custom).
  Complex m0_deriv(Complex z, int order = 1) const;
  /// m_hat(s) = int m0(r) e^{-irs} dr (real and even in s).
  double m0_hat(double s) const;
  /// int t^order m0(t) dt; throws DivergentMoment if order >= d-1.
  double moment(int order) const;
  /// Variance a2 = moment(2).
  double a2() const { return moment(2); }
  /// T* with (1+T*)^{-d-1} < 1e-14 (integration cutoff on the real line).
  double truncation_radius() const;

 private:
  Kind kind_ = Kind::Maxwellian;
  int j_ = 0;
  double theta_ = 0.0;
  double theta_prime_ = 0.0;
  double d_ = 0.0;
  double cprime_ = 0.0;  // GP normalization
  TailClass tail_ = TailClass::ThinTail;
  std::function<Complex(Complex)> custom_m0_;
};

}  // namespace vplin
