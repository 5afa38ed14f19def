#include "swalg/spectral.hpp"

#include <lapacke.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace swalg {

namespace {

constexpr long double kHalfPi = std::numbers::pi_v<long double> / 2;

long double five_point_second(const std::function<long double(long double)>& f, long double x, long double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

long double five_point_first(const std::function<long double(long double)>& f, long double x, long double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

long double laguerre_factor(const Model<long double>& m, int i, int q, long double x) {
  const long double alpha = m.signed_nu(i);
  const long double y = m.s * x * x;
  return std::exp(-y / 2) * std::pow(x, 0.5L + alpha) * laguerre_eval(q, alpha, y);
}

void check_tau(const Model<long double>& m, const std::vector<int>& tau) {
  if (m.n < 2) throw std::invalid_argument("angular equations need N >= 2");
  if (static_cast<int>(tau.size()) != m.n - 1) throw std::invalid_argument("need N-1 angular quantum numbers");
  for (int t : tau)
    if (t < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
}

// mu_l = 2 sum_{i>=l} tau_i + sum_{i>=l} eps_i nu_i + (N - l), for l in 1..N.
long double mu_at(const Model<long double>& m, const std::vector<int>& tau, int l) {
  long tail = 0;
  for (int i = l; i <= m.n - 1; ++i) tail += tau[i - 1];
  return 2.0L * tail + m.sum_signed_nu(l, m.n) + (m.n - l);
}

long double k_at(const Model<long double>& m, const std::vector<int>& tau, int l) {
  const long double mu = mu_at(m, tau, l);
  const long double shift = m.n - l - 1;
  return mu * mu - shift * shift / 4;
}

}  // namespace

long double laguerre_eval(int n, long double alpha, long double x) {
  if (n < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  long double prev = 1;
  if (n == 0) return prev;
  long double cur = 1 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const long double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

long double jacobi_eval(int n, long double alpha, long double beta, long double x) {
  if (n < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  long double prev = 1;
  if (n == 0) return prev;
  long double cur = (alpha - beta) / 2 + (alpha + beta + 2) * x / 2;
  for (int k = 2; k <= n; ++k) {
    const long double c = 2 * k + alpha + beta;
    const long double a1 = 2 * k * (k + alpha + beta) * (c - 2);
    const long double a2 = (c - 1) * (alpha * alpha - beta * beta);
    const long double a3 = (c - 2) * (c - 1) * c;
    const long double a4 = 2 * (k + alpha - 1) * (k + beta - 1) * c;
    const long double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

long double jacobi_derivative(int n, long double alpha, long double beta, long double x) {
  if (n == 0) return 0;
  return (n + alpha + beta + 1) / 2 * jacobi_eval(n - 1, alpha + 1, beta + 1, x);
}

long double second_derivative(const std::function<long double(long double)>& f, long double x, long double h) {
  const long double coarse = five_point_second(f, x, h);
  const long double fine = five_point_second(f, x, h / 2);
  return fine + (fine - coarse) / 15;
}

long double first_derivative(const std::function<long double(long double)>& f, long double x, long double h) {
  const long double coarse = five_point_first(f, x, h);
  const long double fine = five_point_first(f, x, h / 2);
  return fine + (fine - coarse) / 15;
}

long double cartesian_wavefunction(const Model<long double>& m, const std::vector<int>& q,
                                   const std::vector<long double>& x) {
  if (static_cast<int>(q.size()) != m.n || static_cast<int>(x.size()) != m.n)
    throw std::invalid_argument("need one quantum number and one coordinate per axis");
  long double psi = 1;
  for (int i = 1; i <= m.n; ++i) psi *= laguerre_factor(m, i, q[i - 1], x[i - 1]);
  return psi;
}

ResidualResult cartesian_residual(const Model<long double>& m, const std::vector<int>& q,
                                  const std::vector<std::vector<long double>>& samples, long double h) {
  if (static_cast<int>(q.size()) != m.n) throw std::invalid_argument("need one quantum number per axis");
  long double energy = 0;
  for (int i = 1; i <= m.n; ++i) energy += m.s * (2 * q[i - 1] + m.signed_nu(i) + 1);
  const long double b = m.b();
  ResidualResult out;
  for (const auto& x : samples) {
    if (static_cast<int>(x.size()) != m.n) throw std::invalid_argument("sample dimension mismatch");
    for (long double xi : x)
      if (!(xi - 2 * h > 0)) throw std::invalid_argument("sample points must satisfy x_i > 0 away from the origin");
    const long double psi = cartesian_wavefunction(m, q, x);
    if (std::fabs(psi) < 1e-12L) throw std::invalid_argument("sample rejected: |psi| below 1e-12");
    long double h_psi = 0;
    for (int i = 1; i <= m.n; ++i) {
      auto along = [&](long double t) {
        auto y = x;
        y[i - 1] = t;
        return cartesian_wavefunction(m, q, y);
      };
      const long double xi = x[i - 1];
      h_psi += -second_derivative(along, xi, h) / 2 + (b * xi * xi + m.a[i - 1] / (xi * xi)) * psi;
    }
    const long double r = std::fabs(h_psi - energy * psi) / std::fabs(energy * psi);
    out.max_residual = std::max(out.max_residual, r);
    ++out.samples;
  }
  return out;
}

std::vector<std::vector<long double>> cartesian_samples(const Model<long double>& m, const std::vector<int>& q,
                                                        std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  const long double scale = 1 / std::sqrt(m.s);
  std::uniform_real_distribution<double> dist(0.25, 2.5);
  std::vector<std::vector<long double>> out;
  for (std::size_t tries = 0; out.size() < count && tries < 1000 * count; ++tries) {
    std::vector<long double> x(m.n);
    bool ok = true;
    for (int i = 1; i <= m.n; ++i) {
      x[i - 1] = scale * static_cast<long double>(dist(rng));
      // Stay away from polynomial nodes, where the relative residual is ill-conditioned.
      const long double alpha = m.signed_nu(i);
      const long double poly = laguerre_eval(q[i - 1], alpha, m.s * x[i - 1] * x[i - 1]);
      if (std::fabs(poly) < 1e-2L * std::fabs(laguerre_eval(q[i - 1], alpha, 0))) ok = false;
    }
    if (ok && std::fabs(cartesian_wavefunction(m, q, x)) >= 1e-12L) out.push_back(x);
  }
  return out;
}

long double AngularFactor::value(long double theta) const {
  return std::pow(std::cos(theta), cos_exp) * std::pow(std::sin(theta), sin_exp) *
         jacobi_eval(degree, alpha, beta, std::cos(2 * theta));
}

long double AngularFactor::derivative(long double theta) const {
  const long double c = std::cos(theta), s = std::sin(theta);
  const long double envelope = std::pow(c, cos_exp) * std::pow(s, sin_exp);
  const long double p = jacobi_eval(degree, alpha, beta, std::cos(2 * theta));
  const long double dp = jacobi_derivative(degree, alpha, beta, std::cos(2 * theta));
  return envelope * (p * (sin_exp * c / s - cos_exp * s / c) - 2 * std::sin(2 * theta) * dp);
}

AngularFactor angular_factor(const Model<long double>& m, const std::vector<int>& tau, int level) {
  check_tau(m, tau);
  if (level < 1 || level > m.n - 1) throw std::invalid_argument("angular level must be in 1..N-1");
  AngularFactor f;
  f.level = level;
  f.degree = tau[level - 1];
  f.alpha = mu_at(m, tau, level + 1);
  f.beta = m.signed_nu(level);
  f.cos_exp = 0.5L + f.beta;
  f.sin_exp = f.alpha + 1 - (m.n - level) / 2.0L;
  f.k = k_at(m, tau, level);
  f.k_next = k_at(m, tau, level + 1);
  return f;
}

long double angular_residual(const Model<long double>& m, const std::vector<int>& tau, int level, long double theta,
                             CentrifugalSign sign, long double h) {
  const AngularFactor f = angular_factor(m, tau, level);
  if (!(theta > 1e-3L + 2 * h && theta < kHalfPi - 1e-3L - 2 * h))
    throw std::invalid_argument("theta must stay away from 0 and pi/2");
  // Keep the stencil well inside the region where the factor is smooth.
  h = std::min(h, 0.05L * std::min(theta, kHalfPi - theta));
  auto psi = [&](long double t) { return f.value(t); };
  const long double v = psi(theta);
  const long double c = std::cos(theta), s = std::sin(theta);
  const int cot_weight = m.n - level - 1;
  // On the last level the sin^{-2} term is -2 a_N as printed; k_N = 2 a_N.
  long double inner = -f.k_next;
  if (sign == CentrifugalSign::Quoted && level < m.n - 1) inner = f.k_next;
  const long double d2 = second_derivative(psi, theta, h);
  const long double d1 = cot_weight * (c / s) * first_derivative(psi, theta, h);
  const long double wall = -2 * m.a[level - 1] / (c * c) * v;
  const long double centrifugal = inner / (s * s) * v;
  const long double scale =
      std::max({std::fabs(d2), std::fabs(d1), std::fabs(wall), std::fabs(centrifugal), std::fabs(f.k * v)});
  return std::fabs(d2 + d1 + wall + centrifugal + f.k * v) / scale;
}

long double angular_rayleigh_k(const Model<long double>& m, const std::vector<int>& tau, int level) {
  const AngularFactor f = angular_factor(m, tau, level);
  const int weight_exp = m.n - level - 1;
  const long double a = m.a[level - 1];
  // xc is the signed distance to the nearer endpoint; use it to keep cos and
  // sin accurate near pi/2 and 0.
  auto trig = [](long double theta, long double xc, long double& c, long double& s) {
    if (xc > 0 && theta > kHalfPi / 2) {
      c = std::sin(xc);
      s = std::cos(xc);
    } else {
      c = std::cos(theta);
      s = std::sin(theta);
    }
  };
  auto norm = [&](long double theta, long double xc) {
    long double c, s;
    trig(theta, xc, c, s);
    if (c <= 0 || s <= 0) return 0.0L;
    const long double v = std::pow(c, f.cos_exp) * std::pow(s, f.sin_exp) *
                          jacobi_eval(f.degree, f.alpha, f.beta, c * c - s * s);
    return std::pow(s, weight_exp) * v * v;
  };
  auto energy = [&](long double theta, long double xc) {
    long double c, s;
    trig(theta, xc, c, s);
    if (c <= 0 || s <= 0) return 0.0L;
    const long double x = c * c - s * s;
    const long double p = jacobi_eval(f.degree, f.alpha, f.beta, x);
    const long double dp = jacobi_derivative(f.degree, f.alpha, f.beta, x);
    const long double reduced = std::pow(c, f.cos_exp - 1) * std::pow(s, f.sin_exp - 1);
    const long double d = reduced * (p * (f.sin_exp * c * c - f.cos_exp * s * s) - 4 * s * s * c * c * dp);
    const long double v_over_c = reduced * s * p, v_over_s = reduced * c * p;
    return std::pow(s, weight_exp) * (d * d + 2 * a * v_over_c * v_over_c + f.k_next * v_over_s * v_over_s);
  };
  boost::math::quadrature::tanh_sinh<long double> integrator;
  const long double num = integrator.integrate(energy, 0.0L, kHalfPi);
  const long double den = integrator.integrate(norm, 0.0L, kHalfPi);
  return num / den;
}

long double radial_residual(const Model<long double>& m, int tau_r, const std::vector<int>& tau, long double r,
                            CentrifugalSign sign, long double h) {
  check_tau(m, tau);
  if (tau_r < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
  if (!(r - 2 * h > 0)) throw std::invalid_argument("r must stay away from the origin");
  h = std::min(h, 0.05L * r);
  const auto hv = spectrum_hyperspherical(m, tau_r, tau);
  const long double two_nu = hv.two_nu;
  const long double k1 = hv.k[0];
  const long double energy = hv.energy;
  auto psi = [&](long double t) {
    return std::exp(-m.s * t * t / 2) * std::pow(t, two_nu - (m.n - 2) / 2.0L) * laguerre_eval(tau_r, two_nu, m.s * t * t);
  };
  const long double v = psi(r);
  const long double centrifugal = sign == CentrifugalSign::Quoted ? k1 : -k1;
  const long double lhs = -(second_derivative(psi, r, h) + (m.n - 1) / r * first_derivative(psi, r, h) -
                            2 * m.b() * r * r * v + centrifugal / (r * r) * v) /
                          2;
  return std::fabs(lhs - energy * v) / std::fabs(energy * v);
}

void validate_grid(const Grid1D& g) {
  if (!(g.x_min > 0)) throw std::invalid_argument("grid x_min must be positive");
  if (!(g.x_max > g.x_min)) throw std::invalid_argument("grid x_max must exceed x_min");
  if (g.intervals < 8) throw std::invalid_argument("grid needs at least 8 intervals");
}

Grid1D reference_grid(long double b, int points, long double x_min_scale, long double x_max_scale) {
  if (!(b > 0)) throw std::invalid_argument("b must be positive");
  const long double scale = std::pow(2 * b, -0.25L);
  Grid1D g{x_min_scale * scale, x_max_scale * scale, points - 1};
  validate_grid(g);
  return g;
}

std::vector<long double> fd_eigen_1d(long double a, long double b, const Grid1D& grid, int count) {
  validate_grid(grid);
  if (!(b > 0)) throw std::invalid_argument("b must be positive");
  if (a < 0) throw std::invalid_argument("numerical solve needs a >= 0");
  if (count < 1) throw std::invalid_argument("count must be positive");
  const bool full_line = a == 0;
  const long double lo = full_line ? -grid.x_max : grid.x_min;
  const int intervals = full_line ? 2 * grid.intervals : grid.intervals;
  const long double h = (grid.x_max - lo) / intervals;
  const int n = intervals - 1;
  if (count > n) throw std::invalid_argument("more eigenvalues requested than grid unknowns");
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 1);
  for (int k = 0; k < n; ++k) {
    const long double x = lo + (k + 1) * h;
    long double v = 2 / (h * h) + 2 * b * x * x;
    if (!full_line) v += 2 * a / (x * x);
    diag[k] = static_cast<double>(v);
    if (k + 1 < n) off[k] = static_cast<double>(-1 / (h * h));
  }
  lapack_int found = 0, nsplit = 0;
  std::vector<double> w(n);
  std::vector<lapack_int> iblock(n), isplit(n);
  const double abstol = 2 * LAPACKE_dlamch('S');
  const lapack_int info = LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, count, abstol, diag.data(), off.data(), &found,
                                         &nsplit, w.data(), iblock.data(), isplit.data());
  if (info != 0 || found < count) throw std::runtime_error("tridiagonal eigensolver failed");
  return std::vector<long double>(w.begin(), w.begin() + count);
}

FdConvergence fd_convergence(long double a, long double b, const Grid1D& grid, const std::vector<long double>& exact) {
  const int count = static_cast<int>(exact.size());
  Grid1D fine_grid = grid;
  fine_grid.intervals *= 2;
  FdConvergence out;
  out.exact = exact;
  out.coarse = fd_eigen_1d(a, b, grid, count);
  out.fine = fd_eigen_1d(a, b, fine_grid, count);
  for (int k = 0; k < count; ++k) {
    out.extrapolated.push_back((4 * out.fine[k] - out.coarse[k]) / 3);
    out.ratio.push_back((out.coarse[k] - exact[k]) / (out.fine[k] - exact[k]));
  }
  return out;
}

std::vector<long double> b_operator_levels(long double a, long double b, int count) {
  const long double s = std::sqrt(2 * b);
  std::vector<long double> out;
  if (a == 0) {
    for (int k = 0; k < count; ++k) out.push_back(s * (2 * k + 1));
    return out;
  }
  const long double nu = std::sqrt(1 + 8 * a) / 2;
  for (int q = 0; q < count; ++q) out.push_back(2 * s * (2 * q + nu + 1));
  return out;
}

}  // namespace swalg
