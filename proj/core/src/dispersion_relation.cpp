#include "vplin/dispersion_relation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "vplin/poisson_kernels.hpp"
#include "vplin/quadrature.hpp"

namespace vplin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

Complex k_closed_gp_deriv(int j, Complex z) {
  const auto a = pk::kj_coefficients_double(j);
  const Complex w = 1.0 / (1.0 + kI * z);
  Complex acc = 0.0;
  for (int p = j - 1; p >= 0; --p) acc = (acc + a[p] * (p + 2.0)) * w;
  return kI * acc * w * w;  // i sum a_p (p+2) w^{p+3}
}

// delta -> [L((1+delta)/r) - delta^2]/2 with L(z) = z^2 k(z) - 1 (GP).
DispersionPoint solve_zeta_gp(const RadialEquilibrium& eq, double r,
                              Complex delta0) {
  const int j = eq.j();
  Complex delta = delta0;
  int it = 0;
  for (; it < 100; ++it) {
    Complex zeta = (1.0 + delta) / r;
    Complex L = zeta * zeta * k_closed_gp(j, zeta) - 1.0;
    Complex next = 0.5 * (L - delta * delta);
    double change = std::abs(next - delta);
    delta = next;
    if (change < 1e-14) break;
  }
  if (it >= 100)
    throw NoConvergence("solve_zeta: fixed point did not converge (r too large?)");

  Complex zeta = (1.0 + delta) / r;
  for (int p = 0; p < 3; ++p)
    zeta -= (k_closed_gp(j, zeta) - r * r) / k_closed_gp_deriv(j, zeta);

  DispersionPoint dp;
  dp.r = r;
  dp.zeta = zeta;
  dp.omega = r * zeta;
  dp.delta = r * zeta - 1.0;
  dp.residual = std::abs(k_closed_gp(j, zeta) - r * r);
  dp.iterations = it + 1;
  Complex kp = k_closed_gp_deriv(j, zeta);
  dp.m_l = -2.0 * r * (r * r) / kp - 1.0;
  if (dp.residual > 1e-12)
    throw ResidualTooLarge("solve_zeta: |k(zeta) - r^2| > 1e-12");
  return dp;
}

struct AxisData {
  double keff, kp, kpp;  // k_eff and derivatives at zeta1
  double m1, m2, m3;     // m0 derivatives at zeta1
};

AxisData axis_data(const RadialEquilibrium& eq, double z1) {
  AxisData d;
  d.keff = k_eff_real(eq, z1);
  d.kp = k_eff_real_deriv(eq, z1, 1);
  d.kpp = k_eff_real_deriv(eq, z1, 2);
  d.m1 = eq.m0_deriv(Complex(z1, 0.0), 1).real();
  d.m2 = eq.m0_deriv(Complex(z1, 0.0), 2).real();
  d.m3 = eq.m0_deriv(Complex(z1, 0.0), 3).real();
  return d;
}

// General equilibria: Im zeta is typically far below quadrature noise
// (Gaussian-type smallness), so the complex root is found from real-axis
// data: solve Re/Im parts of k(zeta1 + i zeta2) = r^2 expanded to second
// order in zeta2, Newton in zeta1.
DispersionPoint solve_zeta_general(const RadialEquilibrium& eq, double r,
                                   Complex delta0) {
  double z1 = (1.0 + delta0.real()) / r;
  double z2 = 0.0;
  int it = 0;
  AxisData d{};
  double prev_step = std::numeric_limits<double>::infinity();
  bool done = false;
  for (; it < 50; ++it) {
    d = axis_data(eq, z1);
    z2 = kPi * d.m1 / d.kp;
    z2 = kPi * d.m1 / (d.kp + 0.5 * kPi * z2 * d.m3);
    const double F =
        d.keff - r * r - 0.5 * z2 * z2 * d.kpp + kPi * z2 * d.m2;
    const double step = F / d.kp;
    z1 -= step;
    if (std::fabs(step) < 1e-12 * (1.0 + std::fabs(z1))) {
      done = true;
      break;
    }
    // quadrature noise floor: steps stop contracting
    if (it >= 4 && std::fabs(step) >= 0.5 * prev_step) {
      done = true;
      break;
    }
    prev_step = std::fabs(step);
  }
  if (!done)
    throw NoConvergence("solve_zeta: Newton on the real axis did not converge");

  d = axis_data(eq, z1);
  z2 = kPi * d.m1 / d.kp;
  z2 = kPi * d.m1 / (d.kp + 0.5 * kPi * z2 * d.m3);
  const double re_res =
      d.keff - r * r - 0.5 * z2 * z2 * d.kpp + kPi * z2 * d.m2;
  const double im_res = z2 * d.kp - kPi * d.m1 + 0.5 * kPi * z2 * z2 * d.m3;

  DispersionPoint dp;
  dp.r = r;
  dp.zeta = Complex(z1, z2);
  dp.omega = r * dp.zeta;
  dp.delta = dp.omega - 1.0;
  dp.residual = std::hypot(re_res, im_res);
  dp.iterations = it + 1;
  const Complex kprime =
      Complex(d.kp, -kPi * d.m2) + kI * z2 * Complex(d.kpp, -kPi * d.m3);
  dp.m_l = -2.0 * r * (r * r) / kprime - 1.0;
  if (dp.residual > 1e-10)
    throw ResidualTooLarge("solve_zeta: |k(zeta) - r^2| > 1e-10");
  return dp;
}

}  // namespace

Complex k_derivative(const RadialEquilibrium& eq, Complex z) {
  if (eq.kind() == Kind::GeneralizedPoisson)
    return k_closed_gp_deriv(eq.j(), z);
  const double margin =
      eq.theta_prime() * (1.0 + std::fabs(z.real())) - std::fabs(z.imag());
  const double rad = std::min(0.1, margin) / 2.0;
  if (!(rad > 0.0)) throw DomainError("k_derivative: no room inside strip");
  const int n = 64;
  Complex acc = 0.0;
  for (int m = 0; m < n; ++m) {
    const double ang = 2.0 * kPi * m / n;
    const Complex e = std::polar(1.0, ang);
    acc += eval_k(eq, z + rad * e).k * std::conj(e);
  }
  return acc / (double(n) * rad);
}

DispersionPoint solve_zeta(const RadialEquilibrium& eq, double r,
                           std::optional<Complex> warm_delta) {
  if (!(r > 0.0)) throw DomainError("solve_zeta: r must be > 0");
  const Complex delta0 = warm_delta.value_or(Complex(0.0, 0.0));
  if (eq.kind() == Kind::GeneralizedPoisson)
    return solve_zeta_gp(eq, r, delta0);
  return solve_zeta_general(eq, r, delta0);
}

DissipationBracket dissipation_bracket(const RadialEquilibrium& eq,
                                       const DispersionPoint& dp) {
  const double r = dp.r;
  const double m1 = eq.m0_deriv(Complex(dp.omega.real() / r, 0.0)).real();
  DissipationBracket b;
  b.lower = -kPi * m1 / (4.0 * r * r);
  b.upper = -kPi * m1 / (r * r);
  b.omega2 = dp.omega.imag();
  if (!(b.lower <= b.omega2 && b.omega2 <= b.upper))
    throw BracketViolation("omega2 outside the dissipation bracket");
  return b;
}

ExpansionReport thin_tail_expansion_check(const RadialEquilibrium& eq,
                                          const std::vector<double>& r_grid) {
  if (eq.tail_class() != TailClass::ThinTail)
    throw TailClassMismatch("thin-tail expansion on a fat-tail equilibrium");
  if (r_grid.empty()) throw DomainError("thin_tail_expansion_check: empty grid");
  const double a2 = eq.a2();
  const double d = eq.decay_order();

  ExpansionReport rep;
  std::vector<double> lx, ly;
  std::optional<Complex> warm;
  for (double r : r_grid) {
    DispersionPoint dp = solve_zeta(eq, r, warm);
    warm = dp.delta;
    const double rem = std::abs(dp.omega - 1.0 - 1.5 * a2 * r * r);
    const double env =
        std::pow(r, d - 2.0) + r * r * r * std::log(1.0 / r);
    rep.radii.push_back(r);
    rep.remainders.push_back(rem);
    rep.max_ratio = std::max(rep.max_ratio, rem / env);
    lx.push_back(std::log(r));
    ly.push_back(std::log(std::max(rem, 1e-300)));
  }
  auto [slope, icpt] = quad::linear_fit(lx, ly);
  rep.fitted_exponent = slope;
  rep.fitted_log_constant = icpt;
  return rep;
}

double default_r1(const RadialEquilibrium& eq) {
  return eq.kind() == Kind::GeneralizedPoisson ? 0.3 : 0.25;
}

PenroseReport penrose_check(const RadialEquilibrium& eq,
                            const std::vector<double>& probes) {
  PenroseReport rep;
  if (probes.empty()) {
    rep.no_probes = true;
    return rep;
  }
  for (double p : probes)
    if (!(p > 0.0)) throw DomainError("penrose_check: probes must be > 0");

  const double X = 30.0;
  std::map<double, Complex> cache;
  long evals = 0;
  auto kat = [&](double x) {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    if (++evals > 20000)
      throw UnderResolvedCurve("penrose_check: evaluation budget exceeded");
    Complex v = eval_k(eq, Complex(x, 0.0)).k;
    cache.emplace(x, v);
    return v;
  };

  const int n0 = 257;
  for (int i = 0; i < n0; ++i) {
    double x = -X + 2.0 * X * i / (n0 - 1);
    kat(x);
  }

  auto seg_arg = [](Complex w1, Complex w2, double p) {
    return std::arg((w2 - p) / (w1 - p));
  };

  for (double p : probes) {
    // accumulate arg increments of k(x) - p with adaptive subdivision
    std::function<double(double, double, Complex, Complex, int)> walk =
        [&](double x1, double x2, Complex w1, Complex w2, int depth) -> double {
      double da = seg_arg(w1, w2, p);
      if (std::fabs(da) <= kPi / 4.0 &&
          (std::abs(w2 - w1) <= 0.1 * std::abs(w1 - p) || depth >= 6))
        return da;
      if (depth >= 40)
        throw UnderResolvedCurve("penrose_check: subdivision limit reached");
      double xm = 0.5 * (x1 + x2);
      Complex wm = kat(xm);
      return walk(x1, xm, w1, wm, depth + 1) +
             walk(xm, x2, wm, w2, depth + 1);
    };

    double total = 0.0;
    // snapshot the currently cached abscissae for a stable traversal
    std::vector<double> xs;
    xs.reserve(cache.size());
    for (auto& kv : cache) xs.push_back(kv.first);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      total += walk(xs[i], xs[i + 1], cache[xs[i]], cache[xs[i + 1]], 0);
    // closure through k(+-inf) = 0 (straight, far from any probe > 0)
    total += seg_arg(kat(X), Complex(0.0, 0.0) - 1e-30, p);
    total += seg_arg(Complex(0.0, 0.0) - 1e-30, kat(-X), p);

    double wn = total / (2.0 * kPi);
    int w = int(std::lround(wn));
    if (std::fabs(wn - w) > 0.1)
      throw UnderResolvedCurve("penrose_check: non-integer winding estimate");
    rep.winding.emplace_back(p, w);
    if (w != 0) rep.stable = false;
  }

  for (auto& kv : cache) rep.curve.emplace_back(kv.first, kv.second);
  return rep;
}

}  // namespace vplin
