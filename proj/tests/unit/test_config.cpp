#include "doctest.h"

#include "swalg/config.hpp"

using namespace swalg;

TEST_CASE("rational literals") {
  CHECK(*parse_rational_literal("-1/8") == make_rational(-1, 8));
  CHECK(*parse_rational_literal("0.25") == make_rational(1, 4));
  CHECK(*parse_rational_literal("1e-3") == make_rational(1, 1000));
  CHECK(*parse_rational_literal("3") == Rational(3));
  CHECK_FALSE(parse_rational_literal("sqrt(2)"));
  CHECK_FALSE(parse_rational_literal("1/0"));
}

TEST_CASE("minimal config applies defaults with notes") {
  const auto c = parse_config("n = 3\na = \"1\"\nb = \"1/2\"\n");
  CHECK(c.n == 3);
  CHECK(c.a.size() == 3);
  REQUIRE(c.a_exact);
  CHECK((*c.a_exact)[2] == Rational(1));
  CHECK(*c.b_exact == make_rational(1, 2));
  CHECK(c.grid.points == 4000);
  CHECK(c.tol.spectrum == 1e-12);
  bool grid_note = false;
  for (const auto& n : c.notes) grid_note = grid_note || n.find("grid") != std::string::npos;
  CHECK(grid_note);
}

TEST_CASE("float parameters") {
  const auto c = parse_config("n = 2\na = [0.3, 1.0]\nb = 0.5\n");
  CHECK(c.a[0] == doctest::Approx(0.3));
  CHECK(c.a[1] == doctest::Approx(1.0));
  CHECK(c.b == doctest::Approx(0.5));
}

TEST_CASE("tables and overrides") {
  const auto c = parse_config(
      "n = 2\na = [\"1\", \"0.2\"]\ns = \"1\"\nbranches = [[1, 1], [1, -1]]\nsuites = [\"numeric\"]\n"
      "[cutoffs]\nn_max = 4\np_max = 5\n[grid]\npoints = 501\n[tolerances]\nfd_relative = 5e-3\n");
  CHECK(c.b == doctest::Approx(0.5));
  CHECK(c.branches.size() == 2);
  CHECK(c.has_suite("numeric"));
  CHECK_FALSE(c.has_suite("spectra"));
  CHECK(c.n_max == 4);
  CHECK(c.p_max == 5);
  CHECK(c.grid.points == 501);
  CHECK(c.tol.fd_relative == doctest::Approx(5e-3));
  const auto o = parse_config("n = 3\na = \"2\"\nb = \"1\"\n", 5);
  CHECK(o.n == 5);
  CHECK(o.a.size() == 5);
}

TEST_CASE("invalid configs") {
  CHECK_THROWS_AS(parse_config("n = 3\na = \"1\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = 3\na = \"1\"\nb = \"0\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = 3\na = \"-1\"\nb = \"1\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = 2\na = [\"1\", \"1\", \"1\"]\nb = \"1\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = 2\na = \"1\"\nb = \"1\"\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = 2\na = \"1\"\nb = \"1\"\nsuites = [\"nope\"]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = 2\na = \"1\"\nb = \"1\"\nbranches = [[1, -1]]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = 2\na = \"1\"\nb = \"1\"\n[grid]\npoints = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("n = = 2"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.toml"), ConfigError);
}
