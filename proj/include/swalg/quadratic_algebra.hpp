#pragma once

#include <map>

#include "swalg/generators.hpp"

namespace swalg {

// Structure constants of a three-generator quadratic algebra
//   [E,F] = G
//   [E,G] = alpha E^2 + gamma {E,F} + delta E + epsilon F + zeta
//   [F,G] = a E^2 - gamma F^2 - alpha {E,F} + d E - delta F + z
// The constants are polynomials in the model parameters and in symbols for
// central elements (h, beta_k, Y_p, Z_l).
struct QuadAlgConstants {
  ParamPoly alpha, gamma, delta, epsilon, zeta, a, d, z;
};

// {B_i, A_ij, C_ij} with central elements H and B_k (k != i, j).
QuadAlgConstants sal1_constants(int n, int i, int j);
// {Z_{i-1}, Y_i, C_i} with central Y_1, Y_{i+1}, Z_{i-2}; 2 <= i <= N-1.
QuadAlgConstants zal2_constants(int n, int i);
// {Y_1, B_N, D} with central H and Z_{N-2}.
QuadAlgConstants yal1_constants(int n);

// 2H - sum_{k != i,j} beta_k, the central combination of the sal1 substructure.
ParamPoly sal1_central(int n, int i, int j);

// Symbols Y_p / Z_l with the conventions Y_N = Y_{N+1} = 0 and Z_0 = 0.
ParamPoly y_symbol(int n, int p);
ParamPoly z_symbol(int l);

// Casimir values quoted in terms of central elements only.
ParamPoly sal1_casimir_central(int n, int i, int j);
ParamPoly zal2_casimir_central(int n, int i);
ParamPoly yal1_casimir_central(int n);

// Map from central symbols to the operators they stand for.
std::map<Var, Operator> central_operators(const GeneratorSet& g);

// Replaces central symbols by commuting operators; model parameters stay in the
// coefficients. Throws if a central symbol has no operator.
Operator to_operator(const ParamPoly& p, const std::map<Var, Operator>& central, int dim);

// Cubic Casimir of the general quadratic algebra, built from E, F, G with the
// constants realized through `central`.
Operator casimir_cubic(const QuadAlgConstants& c, const Operator& e, const Operator& f, const Operator& g,
                       const std::map<Var, Operator>& central);

// Right-hand sides of [E,G] and [F,G] of the general form.
Operator general_eg(const QuadAlgConstants& c, const Operator& e, const Operator& f,
                    const std::map<Var, Operator>& central);
Operator general_fg(const QuadAlgConstants& c, const Operator& e, const Operator& f,
                    const std::map<Var, Operator>& central);

// The explicit sal1 Casimir as quoted with B_i, A_ij, C_ij (not via the
// general formula).
Operator sal1_casimir_quoted(const GeneratorSet& g, int i, int j);

}  // namespace swalg
