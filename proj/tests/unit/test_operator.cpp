#include "doctest.h"

#include <random>

#include "swalg/generators.hpp"
#include "swalg/operator.hpp"

using namespace swalg;

TEST_CASE("Weyl relation") {
  CHECK(Operator::d(1, 1) * Operator::x(1, 1) == Operator::x(1, 1) * Operator::d(1, 1) + Operator::identity(1));
  CHECK(commutator(Operator::d(1, 1), Operator::x(1, 1)) == Operator::identity(1));
  CHECK(anticommutator(Operator::x(1, 1), Operator::d(1, 1)) ==
        ParamPoly(2) * (Operator::x(1, 1) * Operator::d(1, 1)) + Operator::identity(1));
}

TEST_CASE("second derivative through an inverse square") {
  const Operator lhs = Operator::d(1, 1, 2) * Operator::x(1, 1, -2);
  const Operator rhs = Operator::x(1, 1, -2) * Operator::d(1, 1, 2) -
                       ParamPoly(4) * (Operator::x(1, 1, -3) * Operator::d(1, 1)) +
                       ParamPoly(6) * Operator::x(1, 1, -4);
  CHECK(lhs == rhs);
}

TEST_CASE("mixed product") {
  const Operator lhs = (Operator::x(2, 1) * Operator::d(2, 2)) * (Operator::x(2, 2) * Operator::d(2, 1));
  const Operator rhs =
      Operator::x(2, 1) * Operator::x(2, 2) * Operator::d(2, 1) * Operator::d(2, 2) + Operator::x(2, 1) * Operator::d(2, 1);
  CHECK(lhs == rhs);
  CHECK(lhs.size() == 2);
}

TEST_CASE("parameter substitution") {
  const Operator p = Operator::scalar(2, ParamPoly::a(1) + ParamPoly::s());
  CHECK(p.substitute_params({{Var::a(1), Rational(1)}, {Var::s(), Rational(2)}}) == Operator::scalar(2, 3));
  CHECK(Operator::zero(2).substitute_params({{Var::s(), Rational(5)}}).is_zero());
  CHECK_THROWS_AS(p.substitute_params({{Var::a(1), Rational(1)}}), std::invalid_argument);
}

TEST_CASE("one-dimensional Hamiltonian at a=1, s=1") {
  const Operator h = hamiltonian(1).substitute_params({{Var::a(1), Rational(1)}, {Var::s(), Rational(1)}});
  const Operator expected = ParamPoly(make_rational(-1, 2)) * Operator::d(1, 1, 2) +
                            ParamPoly(make_rational(1, 2)) * Operator::x(1, 1, 2) + Operator::x(1, 1, -2);
  CHECK(h == expected);
}

namespace {

Operator random_operator(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> coef(-4, 4), ce(-2, 2), de(0, 2), idx(1, dim);
  Operator out(dim);
  for (int t = 0; t < 3; ++t) {
    Operator term = Operator::scalar(dim, ParamPoly(make_rational(coef(rng), 1 + t)) + ParamPoly::a(idx(rng)));
    term = term * Operator::x(dim, idx(rng), ce(rng)) * Operator::d(dim, idx(rng), de(rng));
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("ring laws and the Jacobi identity") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const Operator a = random_operator(rng, 2), b = random_operator(rng, 2), c = random_operator(rng, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(commutator(a, b) == -commutator(b, a));
    const Operator jac =
        commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("serialize round trip") {
  const Operator a = a_integral(3, 1, 2);
  const std::string text = a.serialize();
  const Operator back = Operator::parse(text, 3);
  CHECK(back == a);
  CHECK(back.serialize() == text);
  CHECK_THROWS_AS(Operator::parse("1 | 0 0", 2), std::invalid_argument);
}
