#include "doctest.h"

#include <cmath>

#include "swalg/spectral.hpp"

using namespace swalg;

namespace {

Model<long double> model(std::vector<long double> a, long double b, std::vector<int> branch = {}) {
  ModelParams p;
  p.n = static_cast<int>(a.size());
  p.a = std::move(a);
  p.b = b;
  if (branch.empty()) branch.assign(p.n, 1);
  return make_model<long double>(p, branch);
}

}  // namespace

TEST_CASE("orthogonal polynomial values") {
  CHECK(laguerre_eval(0, 0.7L, 3.1L) == 1.0L);
  CHECK(laguerre_eval(1, 0.7L, 3.1L) == doctest::Approx(1 + 0.7 - 3.1));
  // (a+1)(a+2)/2 - (a+2)x + x^2/2 at a = 1, x = 2
  CHECK(laguerre_eval(2, 1.0L, 2.0L) == doctest::Approx(-1.0));
  CHECK(jacobi_eval(0, 0.3L, 1.2L, 0.4L) == 1.0L);
  CHECK(jacobi_eval(1, 0.3L, 1.2L, 0.4L) == doctest::Approx((0.3 - 1.2) / 2 + (0.3 + 1.2 + 2) * 0.4 / 2));
  // P_2^{(0,0)} is the Legendre polynomial
  CHECK(jacobi_eval(2, 0, 0, 0.5L) == doctest::Approx((3 * 0.25 - 1) / 2));
  CHECK(jacobi_derivative(2, 0, 0, 0.5L) == doctest::Approx(1.5));
}

TEST_CASE("cartesian residuals") {
  const auto m1 = model({0}, 0.5L);
  CHECK(cartesian_residual(m1, {0}, cartesian_samples(m1, {0}, 20)).max_residual < 1e-8L);
  const auto m2 = model({1, 1}, 0.5L);
  const auto r = cartesian_residual(m2, {1, 0}, cartesian_samples(m2, {1, 0}, 20));
  CHECK(r.samples == 20);
  CHECK(r.max_residual < 1e-7L);
}

TEST_CASE("samples with a vanishing wavefunction are rejected") {
  const auto m = model({1}, 0.5L);
  // L_1^{3/2}(x^2) vanishes at x^2 = 5/2
  CHECK_THROWS_AS(cartesian_residual(m, {1}, {{std::sqrt(2.5L)}}), std::invalid_argument);
  CHECK_THROWS_AS(cartesian_residual(m, {0}, {{-0.5L}}), std::invalid_argument);
}

TEST_CASE("angular residuals") {
  const auto m2 = model({1, 1}, 0.5L);
  for (long double th : {0.3L, 0.7L, 1.2L}) {
    CHECK(angular_residual(m2, {0}, 1, th) < 1e-8L);
    CHECK(angular_residual(m2, {1}, 1, th) < 1e-7L);
  }
  const auto m3 = model({1, 0.2L, 3}, 0.5L, {1, -1, 1});
  for (long double th : {0.25L, 0.9L})
    for (int level : {1, 2}) CHECK(angular_residual(m3, {2, 1}, level, th) < 1e-7L);
  CHECK_THROWS_AS(angular_residual(m2, {0}, 1, 1e-4L), std::invalid_argument);
}

TEST_CASE("quoted centrifugal sign does not solve the angular equation") {
  const auto m3 = model({1, 1, 1}, 0.5L);
  CHECK(angular_residual(m3, {1, 0}, 1, 0.6L, CentrifugalSign::Quoted) > 1e-3L);
}

TEST_CASE("separation constant from the Rayleigh quotient") {
  const auto m = model({1, 2, 0.6L}, 0.5L);
  for (int level : {1, 2}) {
    const auto f = angular_factor(m, {1, 2}, level);
    CHECK(std::fabs(angular_rayleigh_k(m, {1, 2}, level) - f.k) < 1e-6L * std::fabs(f.k));
  }
}

TEST_CASE("radial residual") {
  const auto m = model({1, 1, 1}, 0.5L);
  for (long double r : {0.6L, 1.3L, 2.4L}) CHECK(radial_residual(m, 2, {1, 0}, r) < 1e-7L);
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(validate_grid({1, 0.5L, 100}), std::invalid_argument);
  CHECK_THROWS_AS(validate_grid({0, 5, 100}), std::invalid_argument);
  CHECK_THROWS_AS(validate_grid({0.1L, 5, 4}), std::invalid_argument);
  CHECK_NOTHROW(validate_grid(reference_grid(0.5L)));
}

TEST_CASE("finite-difference levels of B at a=1, b=1/2") {
  const auto ev = fd_eigen_1d(1, 0.5L, reference_grid(0.5L), 5);
  REQUIRE(ev.size() == 5);
  for (int q = 0; q < 5; ++q) CHECK(std::fabs(ev[q] / (4 * q + 5) - 1) < 1e-3L);
  const auto conv = fd_convergence(1, 0.5L, reference_grid(0.5L, 1000), b_operator_levels(1, 0.5L, 5));
  for (long double r : conv.ratio) CHECK((r > 3.5L && r < 4.5L));
}

TEST_CASE("finite-difference harmonic limit on the full line") {
  const auto exact = b_operator_levels(0, 0.5L, 6);
  CHECK(exact[3] == doctest::Approx(7.0));
  const auto ev = fd_eigen_1d(0, 0.5L, reference_grid(0.5L), 6);
  for (int m = 0; m < 6; ++m) CHECK(std::fabs(ev[m] / exact[m] - 1) < 1e-3L);
}
