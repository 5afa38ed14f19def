#include "doctest.h"

#include "swalg/param_poly.hpp"

using namespace swalg;

TEST_CASE("difference of squares") {
  const ParamPoly a1 = ParamPoly::a(1), s = ParamPoly::s();
  CHECK((a1 + s) * (a1 - s) == a1 * a1 - s * s);
}

TEST_CASE("additive identity") {
  const ParamPoly p = ParamPoly::parse("-1/2*s^2*a1 + 3");
  CHECK(p + ParamPoly() == p);
  CHECK(ParamPoly().is_zero());
}

TEST_CASE("Casimir factor expands") {
  const ParamPoly f = (ParamPoly(8) * ParamPoly::a(1) - ParamPoly(3)) * (ParamPoly(8) * ParamPoly::a(2) - ParamPoly(3));
  const ParamPoly expected = ParamPoly(64) * ParamPoly::a(1) * ParamPoly::a(2) - ParamPoly(24) * ParamPoly::a(1) -
                             ParamPoly(24) * ParamPoly::a(2) + ParamPoly(9);
  CHECK(f == expected);
  CHECK(f.size() == 4);
}

TEST_CASE("b is s^2/2") {
  CHECK(ParamPoly::b().evaluate(std::map<Var, Rational>{{Var::s(), Rational(4)}}) == Rational(8));
}

TEST_CASE("evaluation and substitution") {
  const ParamPoly p = ParamPoly::a(1) + ParamPoly::s();
  CHECK(p.evaluate(std::map<Var, Rational>{{Var::a(1), Rational(1)}, {Var::s(), Rational(2)}}) == Rational(3));
  CHECK_THROWS_AS(p.evaluate(std::map<Var, Rational>{{Var::a(1), Rational(1)}}), std::invalid_argument);
  const ParamPoly q = p.substitute({{Var::s(), ParamPoly::a(2)}});
  CHECK(q == ParamPoly::a(1) + ParamPoly::a(2));
}

TEST_CASE("text round trip") {
  const ParamPoly p = ParamPoly::parse("3/7*h*beta2^2 - 5*Y3*Z1 + s - 1/2");
  CHECK(ParamPoly::parse(p.to_string()) == p);
  CHECK(ParamPoly::parse(p.to_string()).to_string() == p.to_string());
  CHECK(p.depends_on(VarKind::Beta));
  CHECK_FALSE(p.depends_on(VarKind::A));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/8") == make_rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("ring laws on random polynomials") {
  std::vector<ParamPoly> ps;
  unsigned state = 12345u;
  auto next = [&] { return state = state * 1103515245u + 12345u, static_cast<int>((state >> 16) % 7) - 3; };
  for (int k = 0; k < 6; ++k) {
    ParamPoly p;
    for (int t = 0; t < 4; ++t) {
      Monomial m = Monomial::of(Var::a(1 + (t % 3)), 1 + (t % 2)) * Monomial::of(Var::s(), t % 3);
      p.add_term(m, make_rational(next(), 1 + t));
    }
    ps.push_back(p);
  }
  for (const auto& x : ps)
    for (const auto& y : ps) {
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      for (const auto& z : ps) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
}
