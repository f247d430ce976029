#include "vplin/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vplin/quadrature.hpp"

namespace vplin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// rho_n = h_n - dt [ker_n rho_0 / 2 + sum_{0<m<n} ker_{n-m} rho_m];
// the tau = t node carries kernel value zero, so the march is explicit.
std::vector<Complex> volterra_march(const std::vector<double>& ker,
                                    const std::vector<Complex>& h, double dt) {
  const std::size_t n = h.size();
  std::vector<Complex> rho(n);
  if (n == 0) return rho;
  rho[0] = h[0];
  for (std::size_t i = 1; i < n; ++i) {
    Complex acc = 0.5 * ker[i] * rho[0];
    for (std::size_t m = 1; m < i; ++m) acc += ker[i - m] * rho[m];
    rho[i] = h[i] - dt * acc;
  }
  return rho;
}

}  // namespace

double VolterraGrid::xi_abs() const { return norm3(xi); }

std::vector<double> VolterraGrid::times() const {
  std::vector<double> t(n_steps + 1);
  for (int i = 0; i <= n_steps; ++i) t[i] = dt() * i;
  return t;
}

double SpatialProfile::value(double x_abs) const {
  return std::exp(-x_abs * x_abs / (2.0 * sigma * sigma));
}

double SpatialProfile::hat(double xi_abs) const {
  return std::pow(2.0 * kPi, 1.5) * sigma * sigma * sigma *
         std::exp(-0.5 * sigma * sigma * xi_abs * xi_abs);
}

double VelocityProfile::value(double v_abs) const {
  if (family == Family::Gaussian) {
    return std::pow(kPi, -1.5) / (sigma * sigma * sigma) *
           std::exp(-v_abs * v_abs / (sigma * sigma));
  }
  const auto eq = RadialEquilibrium::generalized_poisson(j);
  const double c3 = j * eq.m0(Complex(0.0, 0.0)).real() / kPi;
  return c3 * std::pow(1.0 + v_abs * v_abs, -(j + 1.0));
}

double VelocityProfile::marginal(double u) const {
  if (family == Family::Gaussian)
    return std::exp(-u * u / (sigma * sigma)) / (sigma * std::sqrt(kPi));
  return RadialEquilibrium::generalized_poisson(j)
      .m0(Complex(u, 0.0))
      .real();
}

double VelocityProfile::hat_reduced(double s) const {
  if (family == Family::Gaussian)
    return std::exp(-sigma * sigma * s * s / 4.0);
  return RadialEquilibrium::generalized_poisson(j).m0_hat(s);
}

double VelocityProfile::support() const {
  if (family == Family::Gaussian) return 7.0 * sigma;
  return std::pow(1e8, 1.0 / (2.0 * j));
}

ForcingSpec ForcingSpec::free_streaming(SpatialProfile g, VelocityProfile q) {
  ForcingSpec f;
  f.fs_ = FreeStreamingData{g, q};
  return f;
}

ForcingSpec ForcingSpec::synthetic(std::function<Complex(double)> h_hat) {
  ForcingSpec f;
  f.h_ = std::move(h_hat);
  return f;
}

const FreeStreamingData& ForcingSpec::data() const {
  if (!fs_) throw NonSeparable("forcing has no separable f0 description");
  return *fs_;
}

Complex ForcingSpec::h_hat(double xi_abs, double t) const {
  if (fs_) return fs_->g.hat(xi_abs) * fs_->q.hat_reduced(t * xi_abs);
  return h_(t);
}

VolterraGrid solve_volterra(const RadialEquilibrium& eq,
                            const ForcingSpec& forcing,
                            const std::array<double, 3>& xi, double t_max,
                            int n_steps, bool kernel_off) {
  if (n_steps < 8) throw DomainError("solve_volterra: n_steps must be >= 8");
  if (!(t_max > 0.0)) throw DomainError("solve_volterra: t_max must be > 0");
  VolterraGrid grid;
  grid.xi = xi;
  grid.t_max = t_max;
  grid.n_steps = n_steps;
  const double r = norm3(xi);
  const double dt = grid.dt();

  grid.h_hat.resize(n_steps + 1);
  for (int i = 0; i <= n_steps; ++i)
    grid.h_hat[i] = forcing.h_hat(r, dt * i);

  // the kernel depends only on the lag: one m_hat evaluation per step
  std::vector<double> ker(n_steps + 1, 0.0);
  if (!kernel_off)
    for (int l = 1; l <= n_steps; ++l)
      ker[l] = (l * dt) * eq.m0_hat(l * dt * r);

  grid.rho_hat = volterra_march(ker, grid.h_hat, dt);
  return grid;
}

std::vector<Complex> greens_convolution(const std::vector<double>& smooth,
                                        const std::vector<Complex>& h_hat,
                                        double dt) {
  if (smooth.size() != h_hat.size())
    throw MeshMismatch("greens_convolution: smooth and h sampled on different meshes");
  const std::size_t n = h_hat.size();
  std::vector<Complex> rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    if (i >= 1) {
      acc = 0.5 * (smooth[i] * h_hat[0] + smooth[0] * h_hat[i]);
      for (std::size_t m = 1; m < i; ++m) acc += smooth[i - m] * h_hat[m];
    }
    rho[i] = h_hat[i] + dt * acc;  // delta part of G contributes h itself
  }
  return rho;
}

std::vector<Complex> greens_convolution(
    const std::function<double(double)>& smooth,
    const std::vector<Complex>& h_hat, double dt) {
  std::vector<double> s(h_hat.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = smooth(i * dt);
  return greens_convolution(s, h_hat, dt);
}

std::vector<Complex> free_streaming_forcing(const FreeStreamingData& f0,
                                            const std::vector<double>& t_grid,
                                            const std::array<double, 3>& xi) {
  const double r = norm3(xi);
  const double ghat = f0.g.hat(r);
  std::vector<Complex> h(t_grid.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = ghat * f0.q.hat_reduced(t_grid[i] * r);
  return h;
}

DecayReport forcing_decay_report(const FreeStreamingData& f0,
                                 const std::vector<double>& times) {
  if (times.size() < 2)
    throw DomainError("forcing_decay_report: need at least two times");
  for (double t : times)
    if (!(t > 0.0)) throw DomainError("forcing_decay_report: times must be > 0");

  // h(x,t) = t^{-3} int g(|y|) q(|x-y|/t) dy: the g factor pins the
  // integration region independently of t.
  const double L = 7.0 * f0.g.sigma;
  const int n = 32;
  std::vector<double> gl_x, gl_w;
  quad::gauss_legendre(n, gl_x, gl_w);
  std::vector<double> y(n), w(n), gy(n);
  for (int i = 0; i < n; ++i) {
    y[i] = L * gl_x[i];
    w[i] = L * gl_w[i];
  }

  DecayReport rep;
  rep.times = times;
  std::vector<double> xs;
  for (double f : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) xs.push_back(f * f0.g.sigma);

  std::vector<double> lx, ly;
  for (double t : times) {
    double sup = 0.0;
    for (double x : xs) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            const double r2 = y[a] * y[a] + y[b] * y[b] + y[c] * y[c];
            const double dx = x - y[a];
            const double d2 = dx * dx + y[b] * y[b] + y[c] * y[c];
            acc += w[a] * w[b] * w[c] * f0.g.value(std::sqrt(r2)) *
                   f0.q.value(std::sqrt(d2) / t);
          }
      sup = std::max(sup, std::fabs(acc) / (t * t * t));
    }
    rep.sup_h.push_back(sup);
    lx.push_back(std::log(t));
    ly.push_back(std::log(std::max(sup, 1e-300)));
  }
  auto [slope, icpt] = quad::linear_fit(lx, ly);
  rep.fitted_exponent = -slope;
  rep.fitted_log_constant = icpt;
  return rep;
}

namespace {

// fourth-order differences of the sampled time factor
std::vector<double> fd_derivative(const std::vector<double>& c, double dt) {
  const std::size_t n = c.size();
  if (n < 5) throw DomainError("poisson_representations: grid too short for differences");
  std::vector<double> cp(n);
  const double s = 1.0 / (12.0 * dt);
  cp[0] = s * (-25 * c[0] + 48 * c[1] - 36 * c[2] + 16 * c[3] - 3 * c[4]);
  cp[1] = s * (-3 * c[0] - 10 * c[1] + 18 * c[2] - 6 * c[3] + c[4]);
  for (std::size_t i = 2; i + 2 < n; ++i)
    cp[i] = s * (c[i - 2] - 8 * c[i - 1] + 8 * c[i + 1] - c[i + 2]);
  cp[n - 2] =
      s * (3 * c[n - 1] + 10 * c[n - 2] - 18 * c[n - 3] + 6 * c[n - 4] - c[n - 5]);
  cp[n - 1] = s * (25 * c[n - 1] - 48 * c[n - 2] + 36 * c[n - 3] -
                   16 * c[n - 4] + 3 * c[n - 5]);
  return cp;
}

}  // namespace

RepresentationResult poisson_representations(
    const SeparableH& h, double xi_abs, const std::vector<double>& t_grid) {
  if (!(xi_abs > 0.0))
    throw DomainError("poisson_representations: xi_abs must be > 0");
  const std::size_t n = t_grid.size();
  if (n < 5) throw DomainError("poisson_representations: grid too short");
  if (std::fabs(t_grid[0]) > 1e-14)
    throw MeshMismatch("poisson_representations: grid must start at t = 0");
  const double dt = t_grid[1] - t_grid[0];
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (std::fabs(t_grid[i + 1] - t_grid[i] - dt) > 1e-10 * dt)
      throw MeshMismatch("poisson_representations: grid must be uniform");

  const double r = xi_abs;
  RepresentationResult res;

  // u-quadrature against the marginal; densify if the representation-II
  // denominator 1 - u r - i r gets small on the node set
  int nq = 400;
  std::vector<double> u, w;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<double> gx, gw;
    quad::gauss_legendre(nq, gx, gw);
    u.resize(nq);
    w.resize(nq);
    for (int i = 0; i < nq; ++i) {
      u[i] = h.support * gx[i];
      w[i] = h.support * gw[i];
    }
    bool small = false;
    for (int i = 0; i < nq; ++i)
      if (std::abs(Complex(1.0 - u[i] * r, -r)) < 0.1) small = true;
    if (!small || pass == 1) {
      res.small_denominator_warning = small && nq > 400;
      break;
    }
    res.small_denominator_warning = true;
    nq = 800;
  }
  res.quad_points = nq;

  std::vector<double> mu(nq);
  std::vector<Complex> md(nq), mw(nq);
  for (int i = 0; i < nq; ++i) {
    mu[i] = w[i] * h.marginal(u[i]);
    const Complex den(1.0 - u[i] * r, -r);
    md[i] = mu[i] / den;
    const Complex w2 = r * r * Complex(1.0 - u[i] * u[i], -2.0 * u[i]);
    mw[i] = mu[i] * w2 / (1.0 + w2);
  }

  std::vector<double> cv(n), cpv(n);
  for (std::size_t m = 0; m < n; ++m) cv[m] = h.c(t_grid[m]);
  if (h.c_prime)
    for (std::size_t m = 0; m < n; ++m) cpv[m] = h.c_prime(t_grid[m]);
  else
    cpv = fd_derivative(cv, dt);

  // u-sums per time: plain e^{-isur} (forcing), against the II
  // denominator, and against the II multiplier w^2/(1+w^2)
  std::vector<Complex> Nv(n), Jv(n), R2(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double s = t_grid[m];
    Complex sn = 0.0, sd = 0.0, sw = 0.0;
    for (int i = 0; i < nq; ++i) {
      const Complex e = std::polar(1.0, -s * u[i] * r);
      sn += mu[i] * e;
      sd += md[i] * e;
      sw += mw[i] * e;
    }
    Nv[m] = h.amplitude * cv[m] * sn;
    Jv[m] = h.amplitude * cpv[m] * sd;
    R2[m] = h.amplitude * cv[m] * sw;
  }
  Complex b0 = 0.0;
  for (int i = 0; i < nq; ++i) b0 += md[i];
  b0 *= h.amplitude * cv[0];

  // cumulative trapezoids of e^{is} e^{-(t-s)r} phi(s), advanced by the
  // stable recurrence I_m = e^{-dt r} I_{m-1} + dt/2 (e^{-dt r} phi_{m-1} + phi_m)
  const double decay = std::exp(-dt * r);
  auto cumulative = [&](const std::vector<Complex>& phi) {
    std::vector<Complex> I(n, 0.0);
    for (std::size_t m = 1; m < n; ++m)
      I[m] = decay * I[m - 1] +
             0.5 * dt * (decay * std::polar(1.0, t_grid[m - 1]) * phi[m - 1] +
                         std::polar(1.0, t_grid[m]) * phi[m]);
    return I;
  };
  std::vector<Complex> T1 = cumulative(Nv);
  std::vector<Complex> T2 = cumulative(Jv);

  res.rho_I.resize(n);
  res.rho_II.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const Complex rot = std::polar(1.0, -t_grid[m]);
    res.rho_I[m] = Nv[m] + (rot * (-kI) * T1[m]).real();
    const Complex t2 = std::exp(-t_grid[m] * r) * b0 + T2[m];
    res.rho_II[m] = R2[m] + (rot * t2).real();
  }

  // third path: direct Volterra solve of the same mode
  std::vector<double> ker(n, 0.0);
  for (std::size_t l = 1; l < n; ++l) {
    const double lag = double(l) * dt;
    ker[l] = lag * std::exp(-lag * r);  // m_hat of GP(1)
  }
  res.rho_volterra = volterra_march(ker, Nv, dt);

  for (std::size_t m = 0; m < n; ++m) {
    res.diff_I_II =
        std::max(res.diff_I_II, std::abs(res.rho_I[m] - res.rho_II[m]));
    res.diff_I_volterra = std::max(
        res.diff_I_volterra, std::abs(res.rho_I[m] - res.rho_volterra[m]));
    res.diff_II_volterra = std::max(
        res.diff_II_volterra, std::abs(res.rho_II[m] - res.rho_volterra[m]));
  }
  return res;
}

}  // namespace vplin
