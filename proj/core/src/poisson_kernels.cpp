#include "vplin/poisson_kernels.hpp"

#include <algorithm>
#include <cmath>

namespace vplin::pk {

namespace {

Rational pow2(int k) {
  return Rational(BigInt(1) << k);
}

Rational factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

}  // namespace

KjCoefficients kj_coefficients(int j) {
  if (j < 1) throw DomainError("kj_coefficients: j must be >= 1");
  KjCoefficients cur{1, {Rational(1)}, Rational(1)};
  for (int jj = 1; jj < j; ++jj) {
    // N^{(jj+1)} = sum_k a_k^{(jj)} / (2^k (k+1))
    Rational N = 0;
    for (int k = 0; k < jj; ++k) N += cur.a[k] / (pow2(k) * (k + 1));
    KjCoefficients next{jj + 1, std::vector<Rational>(jj + 1), N};
    next.a[0] = 1;
    for (int p = 1; p <= jj; ++p) {
      Rational s = 0;
      for (int k = p - 1; k < jj; ++k) s += cur.a[k] / (pow2(k) * (k + 1));
      next.a[p] = Rational(p + 1) * pow2(p - 1) / N * s;
    }
    cur = std::move(next);
  }
  return cur;
}

QjPolynomial qj_polynomial(int j) {
  if (j < 1) throw DomainError("qj_polynomial: j must be >= 1");
  QjPolynomial cur{1, {Rational(1)}};
  for (int jj = 1; jj < j; ++jj) {
    QjPolynomial next{jj + 1, std::vector<Rational>(jj + 1)};
    Rational d0 = 0;
    for (int k = 0; k < jj; ++k) d0 += factorial(k) / pow2(k) * cur.d[k];
    next.d[0] = d0;
    for (int p = 1; p <= jj; ++p) {
      Rational s = 0;
      for (int k = p - 1; k < jj; ++k)
        s += factorial(k) / pow2(k + 1) * cur.d[k];
      next.d[p] = pow2(p) / factorial(p) * s;
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> kj_coefficients_double(int j) {
  auto kc = kj_coefficients(j);
  std::vector<double> out(kc.a.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = kc.a[i].convert_to<double>();
  return out;
}

std::vector<double> qj_coefficients_double(int j) {
  auto qp = qj_polynomial(j);
  std::vector<double> out(qp.d.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = qp.d[i].convert_to<double>();
  return out;
}

Complex pole_polynomial(int j, double xi_abs, Complex zeta) {
  auto a = kj_coefficients_double(j);
  Complex val = std::pow(zeta, j + 1);
  double xp = 1.0;
  for (int p = 0; p < j; ++p) {
    val += a[p] * xp * std::pow(zeta, j - 1 - p);
    xp *= xi_abs;
  }
  return val;
}

Complex PoleSet::zeta1() const {
  Complex best = roots.front();
  for (const Complex& r : roots)
    if (r.imag() > best.imag()) best = r;
  return best;
}

namespace {

// Solve f(rho) = 0 on (0, hi] for increasing f with f(0) < 0; bisection
// to 1e-14 relative then Newton polish.
template <typename F, typename DF>
double solve_monotone(F f, DF df, double hi) {
  double lo = 0.0;
  if (f(hi) < 0.0) throw BracketFailure("pole solve: no root in (0, hi]");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-14 * hi) break;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 2; ++it) x -= f(x) / df(x);
  return x;
}

}  // namespace

PoleSet poles_j2(double xi_abs) {
  if (!(xi_abs > 0.0)) throw DomainError("poles_j2: xi_abs must be > 0");
  const double xi = xi_abs;
  // rho + 4 rho^3 = |xi|, monotone in rho.
  const double rho = solve_monotone(
      [xi](double r) { return r + 4.0 * r * r * r - xi; },
      [](double r) { return 1.0 + 12.0 * r * r; }, std::max(xi, 1.0));
  const double kappa = std::sqrt(1.0 + 3.0 * rho * rho);
  const double r2 = rho * rho;
  const double alpha = -4.0 * rho * r2 / (1.0 + 12.0 * r2);
  const double beta =
      -(1.0 / (2.0 * kappa)) * (1.0 + 24.0 * r2 * r2 / (1.0 + 12.0 * r2));

  PoleSet ps;
  ps.j = 2;
  ps.xi_abs = xi;
  ps.rho = rho;
  ps.kappa = kappa;
  ps.alpha = alpha;
  ps.beta = beta;
  ps.roots = {{-2.0 * rho, 0.0}, {rho, kappa}, {rho, -kappa}};
  ps.residues = {{2.0 * alpha, 0.0}, {-alpha, -beta}, {-alpha, beta}};
  return ps;
}

PoleSet poles_j3(double xi_abs) {
  if (!(xi_abs > 0.0)) throw DomainError("poles_j3: xi_abs must be > 0");
  const double xi = xi_abs;
  const double xi2 = xi * xi;
  // 16 rho^6 + 8 rho^4 + rho^2 (1 - 8 xi^2) = xi^2, monotone for small xi.
  auto f = [xi2](double r) {
    double r2 = r * r;
    return ((16.0 * r2 + 8.0) * r2 + 1.0 - 8.0 * xi2) * r2 - xi2;
  };
  auto df = [xi2](double r) {
    double r2 = r * r;
    return (96.0 * r2 * r2 + 32.0 * r2 + 2.0 * (1.0 - 8.0 * xi2)) * r;
  };
  const double rho = solve_monotone(f, df, 2.0 * xi);

  const double rho2 = rho * rho;
  const double kappa1 = std::sqrt(0.5 * (1.0 + 2.0 * rho2 + xi / rho));
  const double k3sq = 0.5 * (1.0 + 2.0 * rho2 - xi / rho);
  if (k3sq <= 0.0) throw BracketFailure("poles_j3: kappa3^2 not positive");
  const double kappa3 = std::sqrt(k3sq);

  const double a = rho * (1.0 + 4.0 * rho2) * (rho2 - xi2) /
                   (8.0 * rho2 * rho2 * (1.0 + 4.0 * rho2) + xi2);
  const double c = -a;
  const double b =
      (-0.25 + a * rho - xi / (4.0 * rho) - a * xi / (4.0 * rho2)) / kappa1;
  const double d =
      (-0.25 + a * rho + xi / (4.0 * rho) + a * xi / (4.0 * rho2)) / kappa3;

  PoleSet ps;
  ps.j = 3;
  ps.xi_abs = xi;
  ps.rho = rho;
  ps.kappa1 = kappa1;
  ps.kappa3 = kappa3;
  ps.a = a;
  ps.b = b;
  ps.c = c;
  ps.d = d;
  ps.roots = {{rho, kappa1}, {rho, -kappa1}, {-rho, kappa3}, {-rho, -kappa3}};
  ps.residues = {{-a, -b}, {-a, b}, {a, -d}, {a, d}};
  return ps;
}

PoleSet poles_general(int j, double xi_abs) {
  if (j < 1) throw DomainError("poles_general: j must be >= 1");
  if (!(xi_abs > 0.0)) throw DomainError("poles_general: xi_abs must be > 0");
  const auto a = kj_coefficients_double(j);
  const int n = j + 1;  // degree

  // Monic coefficients c[q] of zeta^q, q = 0..n.
  std::vector<double> coef(n + 1, 0.0);
  coef[n] = 1.0;
  double xp = 1.0;
  for (int p = 0; p < j; ++p) {
    coef[j - 1 - p] += a[p] * xp;
    xp *= xi_abs;
  }
  double cnorm = 0.0;
  for (double cq : coef) cnorm = std::max(cnorm, std::fabs(cq));

  auto eval = [&](Complex z, Complex& dp) {
    Complex p = coef[n];
    dp = 0.0;
    for (int q = n - 1; q >= 0; --q) {
      dp = dp * z + p;
      p = p * z + coef[q];
    }
    return p;
  };

  // Initial guesses: the +-i pair plus j-1 roots on a small circle.
  std::vector<Complex> z;
  z.reserve(n);
  z.emplace_back(0.0, 1.0);
  z.emplace_back(0.0, -1.0);
  for (int m = 0; m < j - 1; ++m) {
    double ang = 2.0 * M_PI * m / (j - 1) + 0.4;
    z.push_back(3.0 * xi_abs * std::polar(1.0, ang));
  }

  bool converged = false;
  for (int it = 0; it < 300 && !converged; ++it) {
    double maxw = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex dp;
      Complex p = eval(z[i], dp);
      if (std::abs(dp) == 0.0) continue;
      Complex ratio = p / dp;
      Complex s = 0.0;
      for (int k = 0; k < n; ++k)
        if (k != i) s += 1.0 / (z[i] - z[k]);
      Complex w = ratio / (1.0 - ratio * s);
      z[i] -= w;
      maxw = std::max(maxw, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    converged = maxw < 1e-15;
  }
  if (!converged)
    throw RootCountMismatch("poles_general: Aberth iteration did not converge");

  PoleSet ps;
  ps.j = j;
  ps.xi_abs = xi_abs;
  for (int i = 0; i < n; ++i) {
    Complex dp;
    Complex p = eval(z[i], dp);
    if (std::abs(p) > 1e-12 * cnorm)
      throw RootCountMismatch("poles_general: residual too large at root");
    // The strict bound Re < |xi| can hold with a gap far below double
    // precision (it shrinks super-exponentially in j), so allow a
    // roundoff margin before declaring a violation.
    if (z[i].real() > xi_abs + 1e-10 * (1.0 + xi_abs))
      throw StabilityViolation("poles_general: root with Re >= |xi|");
    ps.roots.push_back(z[i]);
    ps.residues.push_back(std::pow(z[i], n) / dp);
  }
  return ps;
}

}  // namespace vplin::pk
