#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "vplin/errors.hpp"

namespace vplin::quad {

struct Tol {
  double abs = 1e-10;
  double rel = 1e-8;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
double norm_of(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    return std::abs(v);
  } else {
    return std::fabs(v);
  }
}

template <typename F>
auto gk15(F& f, double a, double b, double& err)
    -> decltype(f(0.5 * (a + b))) {
  using T = decltype(f(0.5 * (a + b)));
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T resk = T{};
  T resg = T{};
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    T fsum = f(c - x) + f(c + x);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  T fc = f(c);
  resk += kWgk[7] * fc;
  resg += kWg[3] * fc;
  resk *= h;
  resg *= h;
  err = norm_of<T>(resk - resg);
  return resk;
}

template <typename F, typename T>
void adapt(F& f, double a, double b, const Tol& tol, int depth, T& acc,
           double& errsum, long& budget) {
  double err = 0.0;
  T val = gk15(f, a, b, err);
  const double goal = std::max(tol.abs, tol.rel * norm_of<T>(val));
  if (err <= goal || depth >= 52 || --budget <= 0) {
    if (err > goal && depth >= 52)
      throw QuadratureFailure("adaptive quadrature: max depth reached");
    acc += val;
    errsum += err;
    return;
  }
  const double c = 0.5 * (a + b);
  Tol half{tol.abs * 0.6, tol.rel};
  adapt(f, a, c, half, depth + 1, acc, errsum, budget);
  adapt(f, c, b, half, depth + 1, acc, errsum, budget);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
template <typename F>
auto integrate(F&& f, double a, double b, Tol tol = {})
    -> decltype(f(0.5 * (a + b))) {
  using T = decltype(f(0.5 * (a + b)));
  T acc{};
  double errsum = 0.0;
  long budget = 200000;
  detail::adapt(f, a, b, tol, 0, acc, errsum, budget);
  if (budget <= 0)
    throw QuadratureFailure("adaptive quadrature: subdivision budget exceeded");
  return acc;
}

/// Integrates over [a, b] split at the given interior breakpoints.
template <typename F>
auto integrate_panels(F&& f, const std::vector<double>& breaks, Tol tol = {})
    -> decltype(f(breaks.front())) {
  using T = decltype(f(breaks.front()));
  T acc{};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    acc += integrate(f, breaks[i], breaks[i + 1], tol);
  return acc;
}

/// Geometric panel sequence a, 2a, 4a, ... capped at b (a > 0).
std::vector<double> geometric_breaks(double a, double b);

/// Integrates f over [a, inf), truncating once panels fall below tolerance.
template <typename F>
auto integrate_half_line(F&& f, double a, double cutoff, Tol tol = {})
    -> decltype(f(a + 1.0)) {
  using T = decltype(f(a + 1.0));
  double lo = a;
  double step = std::max(1.0, std::fabs(a));
  T acc{};
  while (lo < cutoff) {
    double hi = std::min(lo + step, cutoff);
    acc += integrate(f, lo, hi, tol);
    lo = hi;
    step *= 2.0;
  }
  return acc;
}

/// Principal value of \int f(t)/(x-t) dt via odd symmetrization about x:
/// pv = \int_0^{umax} [f(x-u) - f(x+u)]/u du. The integrand is smooth at
/// u = 0 for differentiable f; Kronrod nodes never touch the endpoint.
template <typename F>
auto pv_cauchy(F&& f, double x, double umax, Tol tol = {})
    -> decltype(f(x)) {
  auto g = [&](double u) { return (f(x - u) - f(x + u)) / u; };
  std::vector<double> breaks = geometric_breaks(1e-3, umax);
  breaks.insert(breaks.begin(), 0.0);
  return integrate_panels(g, breaks, tol);
}

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Least-squares fit y = c + m x; returns {slope, intercept}.
std::pair<double, double> linear_fit(const std::vector<double>& x,
                                     const std::vector<double>& y);

}  // namespace vplin::quad
