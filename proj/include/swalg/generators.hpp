#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "swalg/operator.hpp"

namespace swalg {

// Deliberate perturbation of one base generator, used to exercise failure
// reporting end to end. `target` names a generator such as "B1" or "A12".
struct FaultInjection {
  std::string target;
};

// Integrals of motion of the N-dimensional Smorodinsky-Winternitz Hamiltonian
//   H = -1/2 sum d_i^2 + b sum x_i^2 + sum a_i / x_i^2,   b = s^2 / 2,
// realized as exact operators. Indices are 1-based.
class GeneratorSet {
 public:
  int dim() const { return dim_; }

  const Operator& H() const { return h_; }
  const Operator& B(int i) const;
  const Operator& A(int i, int j) const;
  const Operator& J(int i, int j) const;
  // C_ij = [B_i, A_ij] for any ordered pair, so C_ji = -C_ij.
  const Operator& C(int i, int j) const;
  // D_ijk = [A_ij, A_jk] for pairwise distinct i, j, k (N >= 3).
  const Operator& D(int i, int j, int k) const;
  // Z_l = sum_{1<=i<k<=l+1} A_ik; Z_0 = 0. Valid for 0 <= l <= N-1 (Z_{N-1} is
  // the total sum).
  const Operator& Zl(int l) const;
  // Y_p = sum_{p<=i<k<=N} A_ik; Y_N = Y_{N+1} = 0.
  const Operator& Yp(int p) const;
  // Z = sum_{i<j} A_ij
  const Operator& Z() const { return Zl(dim_ - 1); }
  const Operator& Dplus() const { return dplus_; }
  const Operator& Dminus() const { return dminus_; }
  const Operator& euler() const { return euler_; }
  const Operator& r2() const { return r2_; }

  // The named base generator ("H", "Bi", "Aij"); used by fault injection and
  // golden files.
  std::optional<Operator> named(const std::string& name) const;

 private:
  friend GeneratorSet build_generators(int n, const std::optional<FaultInjection>& fault);

  int dim_ = 0;
  Operator h_, dplus_, dminus_, euler_, r2_;
  std::map<int, Operator> b_;
  std::map<std::pair<int, int>, Operator> a_, j_, c_;
  std::map<std::tuple<int, int, int>, Operator> d_;
  std::map<int, Operator> z_, y_;
};

// Rejects n < 2 and n > kMaxDim with std::invalid_argument.
GeneratorSet build_generators(int n, const std::optional<FaultInjection>& fault = std::nullopt);

// Individual builders, also used directly by tests.
Operator hamiltonian(int n);
Operator b_integral(int n, int i);
Operator angular_momentum(int n, int i, int j);
Operator a_integral(int n, int i, int j);

}  // namespace swalg
