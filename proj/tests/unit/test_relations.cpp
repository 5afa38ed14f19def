#include "doctest.h"

#include <algorithm>

#include "swalg/relations.hpp"

using namespace swalg;

namespace {

const RelationCheck* find(const std::vector<RelationCheck>& cs, const std::string& name, const std::vector<int>& idx) {
  for (const auto& c : cs)
    if (c.name == name && c.indices == idx) return &c;
  return nullptr;
}

void require_all_pass(const std::vector<RelationCheck>& cs) {
  REQUIRE_FALSE(cs.empty());
  for (const auto& c : cs) {
    INFO(c.name);
    CHECK((c.passed || c.informational));
  }
}

}  // namespace

TEST_CASE("symmetry algebra relations, N=3") {
  const auto g = build_generators(3);
  const auto cs = verify_sw_relations(g);
  require_all_pass(cs);
  const auto* bc = find(cs, "[B_i,C_ij]", {1, 2});
  REQUIRE(bc);
  CHECK(bc->passed);
  const auto* ab = find(cs, "[A_ij,B_k]", {2, 3, 1});
  REQUIRE(ab);
  CHECK(ab->passed);
  // The literal reading of the B/A commutator symmetry is recorded, not failed.
  const auto* lit = find(cs, "[B_i,A_ij] - [B_j,A_ij] (literal)", {1, 2});
  REQUIRE(lit);
  CHECK(lit->informational);
  CHECK_FALSE(lit->passed);
}

TEST_CASE("four-index relations, N=4") {
  const auto g = build_generators(4);
  const auto cs = verify_sw_relations(g, Coverage::Spot);
  require_all_pass(cs);
  const auto* ad = find(cs, "[A_kl,D_ijk]", {1, 2, 3, 4});
  REQUIRE(ad);
  CHECK(ad->passed);
}

TEST_CASE("substructure Q_12(3), N=3") {
  const auto cs = verify_substructure_Qij(build_generators(3), 1, 2);
  require_all_pass(cs);
  CHECK(std::any_of(cs.begin(), cs.end(), [](const RelationCheck& c) {
    return c.name == "Qij casimir - central K'_ij" && c.passed;
  }));
}

TEST_CASE("Racah chain and Y_1/B_N substructure") {
  require_all_pass(verify_racah_chain(build_generators(3), 2));
  require_all_pass(verify_yb_substructure(build_generators(3)));
  require_all_pass(verify_racah_chain(build_generators(4), 2));
}

TEST_CASE("su(1,1) ladder and angular Z") {
  for (int n : {2, 3}) require_all_pass(verify_su11(build_generators(n)));
}

TEST_CASE("substitution regression") { require_all_pass(verify_substitution_regression(build_generators(3))); }

TEST_CASE("a corrupted generator is reported by name") {
  const auto cs = verify_sw_relations(build_generators(3, FaultInjection{"B1"}));
  const auto failed = std::count_if(cs.begin(), cs.end(), [](const RelationCheck& c) { return !c.passed && !c.informational; });
  CHECK(failed > 0);
  const auto* hb = find(cs, "[H,B_i]", {1});
  REQUIRE(hb);
  CHECK_FALSE(hb->passed);
  CHECK(hb->term_count > 0);
}

TEST_CASE("task runner keeps input order") {
  std::vector<RelationTask> tasks;
  for (int k = 1; k <= 6; ++k)
    tasks.push_back({"t" + std::to_string(k), {k}, [k] { return Operator::scalar(2, k % 2); }});
  const auto cs = run_tasks(tasks);
  REQUIRE(cs.size() == 6);
  for (int k = 1; k <= 6; ++k) {
    CHECK(cs[k - 1].name == "t" + std::to_string(k));
    CHECK(cs[k - 1].passed == (k % 2 == 0));
  }
}
