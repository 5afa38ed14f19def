#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "swalg/generators.hpp"

using namespace swalg;

namespace {

std::string golden_path(const std::string& name) { return std::string(SWALG_TEST_DATA) + "/golden/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// SWALG_UPDATE_GOLDEN=1 rewrites the files instead of comparing.
void check_golden(const std::string& name, const Operator& op) {
  const std::string text = op.serialize();
  if (std::getenv("SWALG_UPDATE_GOLDEN")) {
    std::ofstream(golden_path(name)) << text;
    return;
  }
  CHECK(text == read_file(golden_path(name)));
}

}  // namespace

TEST_CASE("generator golden files, N=3") {
  const GeneratorSet g = build_generators(3);
  check_golden("n3_B1.txt", g.B(1));
  check_golden("n3_A12.txt", g.A(1, 2));
  check_golden("n3_A23.txt", g.A(2, 3));
}

TEST_CASE("B_i has the three expected terms") {
  const Operator b = b_integral(3, 2);
  CHECK(b.size() == 3);
  CHECK(b.derivative_order() == 2);
}

TEST_CASE("B sum and Z definition, N=3") {
  const GeneratorSet g = build_generators(3);
  CHECK((ParamPoly(2) * g.H() - (g.B(1) + g.B(2) + g.B(3))).is_zero());
  CHECK((g.Z() - (g.A(1, 2) + g.A(1, 3) + g.A(2, 3))).is_zero());
  CHECK(g.Zl(0).is_zero());
  CHECK(g.Yp(3).is_zero());
  CHECK(g.Yp(1) == g.Z());
}

TEST_CASE("C is antisymmetric and D is a commutator") {
  const GeneratorSet g = build_generators(3);
  CHECK(g.C(1, 2) == commutator(g.B(1), g.A(1, 2)));
  CHECK(g.C(2, 1) == -g.C(1, 2));
  CHECK(g.D(1, 2, 3) == commutator(g.A(1, 2), g.A(2, 3)));
}

TEST_CASE("dimension bounds") {
  CHECK_THROWS_AS(build_generators(1), std::invalid_argument);
  CHECK_THROWS_AS(build_generators(kMaxDim + 1), std::invalid_argument);
}

TEST_CASE("fault injection perturbs only the named generator") {
  const GeneratorSet g = build_generators(3);
  const GeneratorSet f = build_generators(3, FaultInjection{"B1"});
  CHECK_FALSE(f.B(1) == g.B(1));
  CHECK(f.B(2) == g.B(2));
  CHECK(f.A(1, 2) == g.A(1, 2));
}
