#pragma once

#include <functional>
#include <vector>

#include "swalg/spectrum.hpp"

namespace swalg {

// Three-term recurrences.
long double laguerre_eval(int n, long double alpha, long double x);
long double jacobi_eval(int n, long double alpha, long double beta, long double x);
// d/dx P_n^{(alpha,beta)}(x)
long double jacobi_derivative(int n, long double alpha, long double beta, long double x);

// Second derivative by the 5-point stencil at steps h and h/2, combined by
// Richardson extrapolation.
long double second_derivative(const std::function<long double(long double)>& f, long double x, long double h);
long double first_derivative(const std::function<long double(long double)>& f, long double x, long double h);

// Product of one-dimensional Laguerre states, unnormalized:
//   prod_i exp(-s x_i^2 / 2) x_i^{1/2 + eps_i nu_i} L_{n_i}^{eps_i nu_i}(s x_i^2)
long double cartesian_wavefunction(const Model<long double>& m, const std::vector<int>& q,
                                   const std::vector<long double>& x);

struct ResidualResult {
  long double max_residual = 0;
  std::size_t samples = 0;
};

// max |H psi - E psi| / |E psi| over the sample points, with H applied by
// finite differences and E from the closed form. Throws std::invalid_argument
// for a sample with some x_i <= 0 or |psi| < 1e-12.
ResidualResult cartesian_residual(const Model<long double>& m, const std::vector<int>& q,
                                  const std::vector<std::vector<long double>>& samples, long double h = 1e-2L);

// Deterministic sample points in (0.25, 2.5) (2b)^{-1/4} per coordinate with
// |psi| above `floor` times its largest sampled value.
std::vector<std::vector<long double>> cartesian_samples(const Model<long double>& m, const std::vector<int>& q,
                                                        std::size_t count, unsigned seed = 7u);

// Which sign of the k_{l+1}/sin^2 (angular) or k_1/r^2 (radial) term to use:
// as quoted (+) or the sign that follows from separating the Laplacian (-).
enum class CentrifugalSign { Quoted, Separated };

// Angular factor psi(theta_l) for level l in 1..N-1 with angular quantum
// numbers tau_1..tau_{N-1}.
struct AngularFactor {
  int level = 0;
  long double cos_exp = 0, sin_exp = 0, alpha = 0, beta = 0;
  int degree = 0;
  long double k = 0;       // k_l
  long double k_next = 0;  // k_{l+1} (unused on the last level)
  long double value(long double theta) const;
  long double derivative(long double theta) const;
};

AngularFactor angular_factor(const Model<long double>& m, const std::vector<int>& tau, int level);

// Residual of the angular equation for level l at theta, relative to the
// largest of its individual terms (k_l can be close to 0 on minus branches).
// Throws for theta within 1e-3 of 0 or pi/2.
long double angular_residual(const Model<long double>& m, const std::vector<int>& tau, int level, long double theta,
                             CentrifugalSign sign = CentrifugalSign::Separated, long double h = 1e-3L);

// Rayleigh quotient of the angular operator on the exact factor; estimates k_l.
long double angular_rayleigh_k(const Model<long double>& m, const std::vector<int>& tau, int level);

// Residual of the radial equation at r for psi(r) = exp(-s r^2/2) r^{2nu-(N-2)/2}
// L_{tau_r}^{2nu}(s r^2), relative to |E psi|.
long double radial_residual(const Model<long double>& m, int tau_r, const std::vector<int>& tau, long double r,
                            CentrifugalSign sign = CentrifugalSign::Separated, long double h = 1e-3L);

struct Grid1D {
  long double x_min = 0, x_max = 0;
  int intervals = 0;
  long double step() const { return (x_max - x_min) / intervals; }
};

// Throws std::invalid_argument unless 0 < x_min < x_max and intervals >= 8.
void validate_grid(const Grid1D& g);

// [1e-3 (2b)^{-1/4}, 12 (2b)^{-1/4}] with the given number of points.
Grid1D reference_grid(long double b, int points = 4000, long double x_min_scale = 1e-3L,
                      long double x_max_scale = 12.0L);

// Lowest `count` eigenvalues of -d^2 + 2b x^2 + 2a/x^2 with Dirichlet ends,
// second-order differences, symmetric tridiagonal eigensolver. For a = 0 the
// grid is mirrored to [-x_max, x_max].
std::vector<long double> fd_eigen_1d(long double a, long double b, const Grid1D& grid, int count);

struct FdConvergence {
  std::vector<long double> coarse, fine, extrapolated, exact, ratio;
};

// Two grids (intervals and 2*intervals); ratio_k = err_coarse / err_fine
// against the closed form exact_k.
FdConvergence fd_convergence(long double a, long double b, const Grid1D& grid, const std::vector<long double>& exact);

// Closed form 2 s (2q + nu + 1) for q = 0..count-1, or the merged even/odd
// ladder s(2m + 1) when a = 0.
std::vector<long double> b_operator_levels(long double a, long double b, int count);

}  // namespace swalg
