#include "doctest.h"

#include "swalg/spectrum.hpp"

using namespace swalg;

namespace {

ModelParams params(std::vector<Rational> a, Rational b) {
  ModelParams p;
  p.n = static_cast<int>(a.size());
  for (const auto& v : a) p.a.push_back(to_long_double(v));
  p.b = to_long_double(b);
  p.a_exact = std::move(a);
  p.b_exact = std::move(b);
  return p;
}

ModelParams float_params(std::vector<long double> a, long double b) {
  ModelParams p;
  p.n = static_cast<int>(a.size());
  p.a = std::move(a);
  p.b = b;
  return p;
}

}  // namespace

TEST_CASE("degeneracy") {
  CHECK(degeneracy_binomial(3, 2) == 6);
  for (int n = 0; n <= 10; ++n) CHECK(degeneracy_binomial(1, n) == 1);
  CHECK(degeneracy_binomial(6, 10) == degeneracy_brute_force(6, 10));
  CHECK(degeneracy_binomial(6, 10) == 3003);
}

TEST_CASE("cartesian ground state, N=2, a=(1,1), b=1/2") {
  const auto m = make_model<Rational>(params({1, 1}, make_rational(1, 2)), {1, 1});
  CHECK(cartesian_energy(m, {0, 0}) == Rational(5));
  const auto levels = spectrum_cartesian(m, 3);
  REQUIRE(levels.size() == 4);
  CHECK(levels[2].energy == Rational(9));
  CHECK(levels[2].multiplicity == 3);
}

TEST_CASE("one-dimensional harmonic limit with both branches") {
  const auto p = params({0}, make_rational(1, 2));
  const auto branches = admitted_branches(p);
  REQUIRE(branches.size() == 2);
  std::vector<Rational> all;
  for (const auto& br : branches)
    for (const auto& e : cartesian_energies(make_model<Rational>(p, br), 4)) all.push_back(e);
  std::sort(all.begin(), all.end());
  for (std::size_t m = 0; m < 6; ++m) CHECK(all[m] == make_rational(2 * static_cast<long>(m) + 1, 2));
}

TEST_CASE("hyperspherical energies") {
  const auto m = make_model<Rational>(params({1, 1, 1}, make_rational(1, 2)), {1, 1, 1});
  CHECK(spectrum_hyperspherical(m, 1, {0, 0}).energy == make_rational(19, 2));
  CHECK(spectrum_hyperspherical(m, 0, {0, 0}).energy == make_rational(15, 2));
  const auto v = spectrum_hyperspherical(m, 2, {1, 3});
  CHECK(v.energy == v.energy_radial_form);
  for (std::size_t l = 0; l < v.k.size(); ++l) {
    const Rational w = make_rational(m.n - static_cast<int>(l) - 2, 2);
    CHECK(v.k[l] == v.mu[l] * v.mu[l] - w * w);
  }
}

TEST_CASE("four derivations agree exactly") {
  for (const auto& p : {params({1, 1, 1}, make_rational(1, 2)), params({3, make_rational(3, 8), 0}, Rational(2)),
                        params({1, 6}, make_rational(9, 8))}) {
    for (const auto& br : admitted_branches(p)) {
      const auto m = make_model<Rational>(p, br);
      const auto cart = cartesian_energies(m, 6);
      CHECK(compare_multisets(cart, hyperspherical_energies(m, 6), 0).equal);
      CHECK(compare_multisets(cart, radial_form_energies(m, 6), 0).equal);
      CHECK(compare_multisets(cart, substructure_energies(m, 6), 0).equal);
      CHECK(compare_multisets(cart, racah_energies(m, 6), 0).equal);
    }
  }
}

TEST_CASE("irrational nu in floating point") {
  const auto p = float_params({0.3L, 1.7L, 0.05L, 2.0L}, 0.35L);
  CHECK_FALSE(exact_available(p));
  for (const auto& br : admitted_branches(p)) {
    const auto m = make_model<long double>(p, br);
    const auto cart = cartesian_energies(m, 5);
    CHECK(compare_multisets(cart, racah_energies(m, 5), 1e-12L).equal);
    CHECK(compare_multisets(cart, substructure_energies(m, 5), 1e-12L).equal);
  }
}

TEST_CASE("Racah chain values") {
  const auto m = make_model<Rational>(params({1, 1, 1}, make_rational(1, 2)), {1, 1, 1});
  const auto r = racah_spectrum(m, {1, 2}, 1);
  CHECK(r.energy == r.energy_closed);
  CHECK(r.positivity_ok);
  // z_{N-2} = 4 sum q + 2 sum_{i<=N-1} nu_i + 2(N-2)
  CHECK(r.z.back() == Rational(4 * 3 + 2 * 3 + 2));
  const auto m2 = make_model<Rational>(params({1, 3}, make_rational(1, 2)), {1, 1});
  // sqrt(2b)(2p + 2q + nu_1 + nu_2 + 2), nu = (3/2, 5/2)
  CHECK(racah_spectrum(m2, {2}, 1).energy == Rational(2 + 4 + 4 + 2));
}

TEST_CASE("branch policy and parameter checks") {
  CHECK(admitted_branches(params({1, make_rational(1, 4)}, Rational(1))).size() == 2);
  CHECK(admitted_branches(params({1, 1}, Rational(1))).size() == 1);
  CHECK_THROWS_AS(make_model<long double>(float_params({1, 1}, 0), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_model<long double>(float_params({-1}, 1), {1}), std::invalid_argument);
  CHECK_THROWS_AS(make_model<long double>(float_params({1, 1}, 1), {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(racah_spectrum(make_model<long double>(float_params({1, 1}, 1), {1, 1}), {-1}, 0),
                  std::invalid_argument);
}
