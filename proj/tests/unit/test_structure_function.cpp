#include "doctest.h"

#include "swalg/crosscheck.hpp"
#include "swalg/quadratic_algebra.hpp"
#include "swalg/structure_function.hpp"

using namespace swalg;

namespace {

ModelParams uniform_params(int n, long num, long den, long b_num, long b_den) {
  ModelParams p;
  p.n = n;
  p.a.assign(n, static_cast<long double>(num) / den);
  p.b = static_cast<long double>(b_num) / b_den;
  p.a_exact = std::vector<Rational>(n, make_rational(num, den));
  p.b_exact = make_rational(b_num, b_den);
  return p;
}

}  // namespace

TEST_CASE("general Casimir of zero constants vanishes") {
  const Operator z = Operator::zero(2);
  CHECK(casimir_cubic(QuadAlgConstants{}, z, z, z, {}).is_zero());
}

TEST_CASE("gamma=0 structure function with only epsilon") {
  NumericConstants<Rational> c;
  c.epsilon = 1;
  const auto phi = structure_function_gamma0(c, Rational(8));
  CHECK(phi.degree() == 0);
  CHECK(phi(Rational(5)) == Rational(-2));
}

TEST_CASE("branch preconditions") {
  NumericConstants<Rational> c;
  CHECK_THROWS_AS(structure_function_gamma0(c, Rational(1)), std::invalid_argument);
  c.gamma = 1;
  CHECK_THROWS_AS(structure_function_gamma0(c, Rational(1)), std::invalid_argument);
  c.gamma = 0;
  CHECK_THROWS_AS(structure_function_gammaNZ(c, Rational(1)), std::invalid_argument);
}

TEST_CASE("gamma=0 form matches the four-root product") {
  const auto m = make_model<Rational>(uniform_params(3, 1, 1, 1, 2), {1, 1, 1});
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const auto r = sal1_gamma0_crosscheck(m, i, j, 6, 5);
    CHECK(r.proportional);
    CHECK(r.exact);
    // 1/(64 b^2) at b = 1/2
    CHECK(r.constant == doctest::Approx(16.0));
  }
}

TEST_CASE("gamma!=0 form against the eight-root product") {
  const auto m = make_model<Rational>(uniform_params(4, 1, 1, 1, 2), {1, 1, 1, 1});
  const auto printed = zal2_crosscheck(m, 2, Rational(7), Rational(5), Rational(3), GammaNZVariant::Printed, 9);
  CHECK_FALSE(printed.proportional);
  const auto corrected = zal2_crosscheck(m, 2, Rational(7), Rational(5), Rational(3), GammaNZVariant::Corrected, 9);
  CHECK(corrected.proportional);
  CHECK(corrected.ratios.size() == 9);
}

TEST_CASE("gamma!=0 form against the six-root product") {
  const auto m = make_model<Rational>(uniform_params(3, 1, 1, 1, 2), {1, 1, 1});
  CHECK(yal1_crosscheck(m, Rational(11), Rational(3), GammaNZVariant::Corrected, 9).proportional);
  CHECK_FALSE(yal1_crosscheck(m, Rational(11), Rational(3), GammaNZVariant::Printed, 9).proportional);
}

TEST_CASE("constraint solving recovers u and the central eigenvalue") {
  // nu = 3/2, s = 1: u = 1/2 + nu/2 = 5/4 and X = 2s(2(p+1) + nu_i + nu_j) = 18 at p = 2
  const auto roots = sal1_roots(make_rational(3, 2), make_rational(3, 2), Rational(1));
  const auto sols = solve_constraints(roots, 4);
  bool found = false;
  for (const auto& s : sols)
    if (s.u_root == 1 && s.end_root == 2 && s.p == 2) {
      found = true;
      CHECK(s.u == make_rational(5, 4));
      CHECK(s.t == Rational(18));
      CHECK(s.t_determined);
    }
  CHECK(found);
}

TEST_CASE("six-root constraints give the energy") {
  // e(H) = sqrt(b/2)(4p + 4 + z + 2 nu) = 1/2 (8 + 3 + 3) = 7 at s = 1, z = 3, nu = 3/2, p = 1
  const auto roots = yal1_roots(Rational(3), make_rational(3, 2), Rational(1));
  const auto sols = solve_constraints(roots, 1);
  bool found = false;
  for (const auto& s : sols)
    if (s.u_root == 5 && s.end_root == 1 && s.p == 1) {
      found = true;
      CHECK(s.t == Rational(7));
    }
  CHECK(found);
}

TEST_CASE("no integer root spacing gives no solution") {
  std::vector<AffineRoot<Rational>> roots{{make_rational(3, 10), 0, "r1"}, {make_rational(11, 20), 0, "r2"}};
  CHECK(solve_constraints(roots, 8).empty());
}

TEST_CASE("number operator laws") {
  NumericConstants<Rational> lin;
  lin.epsilon = 4;
  const auto l = NumberOperatorLaw<Rational>::from(lin, make_rational(1, 2));
  CHECK(l(3) == Rational(7));
  NumericConstants<Rational> quad;
  quad.gamma = 2;
  quad.epsilon = 4;
  const auto q = NumberOperatorLaw<Rational>::from(quad, Rational(1));
  // gamma/2 ((q+u)^2 - eps/gamma^2 - 1/4) at q = 1
  CHECK(q(1) == make_rational(11, 4));
  NumericConstants<Rational> bad;
  CHECK_THROWS_AS(NumberOperatorLaw<Rational>::from(bad, Rational(0)), std::invalid_argument);
}
