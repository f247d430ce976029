#include "vplin/oscillatory.hpp"

#include <algorithm>
#include <cmath>

namespace vplin::osc {

namespace {

// Monomial coefficients of the degree-4 interpolant through values at
// t = -1, -1/2, 0, 1/2, 1 (even/odd split keeps this well conditioned).
void monomial_coeffs(const Complex v[5], Complex c[5]) {
  const Complex c0 = v[2];
  const Complex e1 = 0.5 * (v[3] + v[1]) - c0;
  const Complex e2 = 0.5 * (v[4] + v[0]) - c0;
  const Complex o1 = 0.5 * (v[3] - v[1]);
  const Complex o2 = 0.5 * (v[4] - v[0]);
  c[0] = c0;
  c[4] = (4.0 / 3.0) * (e2 - 4.0 * e1);
  c[2] = e2 - c[4];
  c[3] = (4.0 / 3.0) * (o2 - 2.0 * o1);
  c[1] = o2 - c[3];
}

constexpr double kNodes[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
constexpr double kCheck[4] = {-0.75, -0.25, 0.25, 0.75};

}  // namespace

void filon_moments(Complex w, Complex nu[5]) {
  const Complex iw = Complex(0.0, 1.0) * w;
  if (std::abs(w) < 5.0) {
    // Taylor in w of mu_k = int t^k e^{iwt} dt, then shift by e^{iw};
    // mu_k = sum over n with n+k even of 2 (iw)^n / (n! (n+k+1)).
    for (int k = 0; k < 5; ++k) nu[k] = 0.0;
    Complex term(1.0, 0.0);  // (iw)^n / n!
    for (int n = 0; n < 48; ++n) {
      for (int k = 0; k < 5; ++k) {
        if ((n + k) % 2 == 0) nu[k] += 2.0 * term / double(n + k + 1);
      }
      term *= iw / double(n + 1);
      if (std::abs(term) < 1e-18 && n > 6) break;
    }
    const Complex shift = std::exp(iw);
    for (int k = 0; k < 5; ++k) nu[k] *= shift;
    return;
  }
  // Upward recursion for nu_k directly; every term stays bounded when
  // Im w >= 0 (|e^{2iw}| <= 1), unlike the centered moments.
  const Complex e2 = std::exp(2.0 * iw);
  nu[0] = (e2 - 1.0) / iw;
  for (int k = 1; k < 5; ++k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    nu[k] = (e2 - sgn) / iw - (double(k) / iw) * nu[k - 1];
  }
}

FilonIntegrator::FilonIntegrator(const std::function<Complex(double)>& f,
                                 double a, double b, double abs_tol,
                                 double rel_tol) {
  if (!(b > a)) throw DomainError("FilonIntegrator: empty interval");
  build(f, a, b, abs_tol / (b - a), rel_tol, 0);
}

void FilonIntegrator::build(const std::function<Complex(double)>& f, double a,
                            double b, double tol_per_len, double rel_tol,
                            int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex v[5];
  double amp = 0.0;
  for (int i = 0; i < 5; ++i) {
    v[i] = f(c + h * kNodes[i]);
    amp = std::max(amp, std::abs(v[i]));
  }
  Complex coef[5];
  monomial_coeffs(v, coef);
  double err = 0.0;
  for (double t : kCheck) {
    Complex p =
        coef[0] + t * (coef[1] + t * (coef[2] + t * (coef[3] + t * coef[4])));
    err = std::max(err, std::abs(p - f(c + h * t)));
  }
  const double goal = std::max(tol_per_len, rel_tol * amp);
  if (err <= goal || depth >= 48) {
    if (err > goal && depth >= 48)
      throw QuadratureFailure("FilonIntegrator: amplitude not resolved");
    Panel p;
    p.c = c;
    p.h = h;
    for (int i = 0; i < 5; ++i) p.coef[i] = coef[i];
    panels_.push_back(p);
    return;
  }
  build(f, a, c, tol_per_len, rel_tol, depth + 1);
  build(f, c, b, tol_per_len, rel_tol, depth + 1);
}

Complex FilonIntegrator::operator()(Complex w) const {
  Complex total(0.0, 0.0);
  Complex nu[5];
  for (const Panel& p : panels_) {
    filon_moments(w * p.h, nu);
    Complex s(0.0, 0.0);
    for (int k = 0; k < 5; ++k) s += p.coef[k] * nu[k];
    // nu is anchored at the panel's left edge c - h.
    total += p.h * std::exp(Complex(0.0, 1.0) * w * (p.c - p.h)) * s;
  }
  return total;
}

}  // namespace vplin::osc
