#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "swalg/generators.hpp"

namespace swalg {

// Outcome of one exact operator identity lhs == rhs.
struct RelationCheck {
  std::string name;
  std::vector<int> indices;
  Operator residual;  // lhs - rhs
  bool passed = false;
  std::size_t term_count = 0;
  double elapsed_seconds = 0.0;
  // Informational checks record a literal reading that is known not to hold;
  // they never count as failures.
  bool informational = false;
  std::string note;
};

enum class Coverage {
  Full,  // every admissible index tuple
  Spot,  // first admissible tuple of each relation
};

// Vanishing commutators, the B-sum identity, the C symmetry, cyclicity of D and
// the full list of non-vanishing commutators of the symmetry algebra. Relations
// that need more indices than N are skipped.
std::vector<RelationCheck> verify_sw_relations(const GeneratorSet& g, Coverage coverage = Coverage::Full);

// The three commutators of {B_i, A_ij, C_ij}, their general-form constants, and
// the Casimir identities.
std::vector<RelationCheck> verify_substructure_Qij(const GeneratorSet& g, int i, int j);

// {Z_{i-1}, Y_i, C_i} for 2 <= i <= N-1.
std::vector<RelationCheck> verify_racah_chain(const GeneratorSet& g, int i);

// {Y_1, B_N, D} with central H and Z_{N-2}.
std::vector<RelationCheck> verify_yb_substructure(const GeneratorSet& g);

// Every admissible chain index plus the Y_1/B_N substructure and the
// commutation of Z_l, Y_p with H.
std::vector<RelationCheck> verify_racah_suite(const GeneratorSet& g);

// Ladder operators and the angular form of Z = sum A_ij.
std::vector<RelationCheck> verify_su11(const GeneratorSet& g);

// Substitutes `count` pseudo-random rational parameter sets into the base
// generators and re-derives a handful of relations numerically-exactly.
std::vector<RelationCheck> verify_substitution_regression(const GeneratorSet& g, int count = 3,
                                                          std::uint32_t seed = 20240601u);

// Runs `checks` of the given (name, indices, residual builder) list in
// parallel; exposed for the CLI so all suites share the scheduling policy.
struct RelationTask {
  std::string name;
  std::vector<int> indices;
  std::function<Operator()> residual;
  bool informational = false;
  std::string note;
};
std::vector<RelationCheck> run_tasks(const std::vector<RelationTask>& tasks);

}  // namespace swalg
