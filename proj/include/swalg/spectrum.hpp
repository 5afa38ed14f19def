#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalg/quadratic_algebra.hpp"
#include "swalg/scalar.hpp"
#include "swalg/structure_function.hpp"

namespace swalg {

// Numeric model parameters. The exact fields are filled when the inputs were
// given as rationals; they enable the Rational code path.
struct ModelParams {
  int n = 0;
  std::vector<long double> a;
  long double b = 0;
  std::optional<std::vector<Rational>> a_exact;
  std::optional<Rational> b_exact;
};

// nu_i = sqrt(1 + 8 a_i) / 2 and s = sqrt(2b) in the scalar type T, with one
// branch sign per coordinate.
template <class T>
struct Model {
  int n = 0;
  std::vector<T> a, nu;
  T s{};
  std::vector<int> branch;

  T b() const { return s * s / T(2); }
  T signed_nu(int i) const { return T(branch[i - 1]) * nu[i - 1]; }
  T sum_signed_nu(int from, int to) const {
    T acc(0);
    for (int i = from; i <= to; ++i) acc += signed_nu(i);
    return acc;
  }
  T sum_a(int from, int to) const {
    T acc(0);
    for (int i = from; i <= to; ++i) acc += a[i - 1];
    return acc;
  }
};

void validate_params(const ModelParams& p);

// True when the exact path is available (rational s and nu_i).
bool exact_available(const ModelParams& p);

template <class T>
Model<T> make_model(const ModelParams& p, const std::vector<int>& branch) {
  validate_params(p);
  if (static_cast<int>(branch.size()) != p.n) throw std::invalid_argument("one branch sign per coordinate required");
  for (int e : branch)
    if (e != 1 && e != -1) throw std::invalid_argument("branch signs must be +1 or -1");
  Model<T> m;
  m.n = p.n;
  m.branch = branch;
  if constexpr (std::is_same_v<T, Rational>) {
    if (!p.a_exact || !p.b_exact) throw std::invalid_argument("exact parameters not available");
    m.a = *p.a_exact;
    m.s = scalar_sqrt<Rational>(2 * *p.b_exact);
  } else {
    m.a.assign(p.a.begin(), p.a.end());
    m.s = std::sqrt(T(2) * T(p.b));
  }
  for (const T& ai : m.a) m.nu.push_back(scalar_sqrt<T>(T(1) + T(8) * ai) / T(2));
  return m;
}

// Branch sign policy: +1 everywhere, with -1 also admitted for coordinates in
// the window -1/8 < a_i < 3/8. Returns every admitted sign vector, the default
// (all +1) first.
std::vector<std::vector<int>> admitted_branches(const ModelParams& p);

// Calls fn(q) for every q in N^n with sum(q) <= max_sum, in lexicographic
// order of (sum, q).
void for_each_tuple(int n, int max_sum, const std::function<void(const std::vector<int>&)>& fn);

// Number of q in N^n with sum exactly m, two ways.
unsigned long long degeneracy_binomial(int n, int m);
unsigned long long degeneracy_brute_force(int n, int m);

template <class T>
struct Level {
  T energy{};
  unsigned long long multiplicity = 0;
  int total = 0;
};

template <class T>
T cartesian_energy(const Model<T>& m, const std::vector<int>& q) {
  T e(0);
  for (int i = 1; i <= m.n; ++i) e += T(2 * q[i - 1]) + m.signed_nu(i) + T(1);
  return m.s * e;
}

// Energies sqrt(2b) sum(2 n_i + eps_i nu_i + 1) over sum(n_i) <= n_max, grouped
// by total quantum number with binomial multiplicities.
template <class T>
std::vector<Level<T>> spectrum_cartesian(const Model<T>& m, int n_max) {
  if (!(m.s > T(0))) throw std::invalid_argument("b must be positive");
  std::vector<Level<T>> out;
  for (int tot = 0; tot <= n_max; ++tot) {
    std::vector<int> q(m.n, 0);
    q[0] = tot;
    out.push_back({cartesian_energy(m, q), degeneracy_binomial(m.n, tot), tot});
  }
  return out;
}

template <class T>
std::vector<T> cartesian_energies(const Model<T>& m, int n_max) {
  std::vector<T> out;
  for_each_tuple(m.n, n_max, [&](const std::vector<int>& q) { out.push_back(cartesian_energy(m, q)); });
  return out;
}

template <class T>
struct HypersphericalValues {
  T energy{};             // sqrt(2b)(2 tau_r + 2 sum tau + sum eps nu + N)
  T energy_radial_form{}; // sqrt(2b)(2 tau_r + 2 nu + 1)
  T two_nu{};
  std::vector<T> k;          // k_1..k_{N-1}
  std::vector<T> mu_quoted;  // mu_1..mu_{N-1} as quoted
  std::vector<T> mu;         // exponent parameter consistent with k: k_l = mu_l^2 - (N-l-1)^2/4
};

template <class T>
HypersphericalValues<T> spectrum_hyperspherical(const Model<T>& m, int tau_r, const std::vector<int>& tau) {
  const int n = m.n;
  if (n < 2) throw std::invalid_argument("hyperspherical separation needs N >= 2");
  if (static_cast<int>(tau.size()) != n - 1) throw std::invalid_argument("need N-1 angular quantum numbers");
  if (tau_r < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
  for (int t : tau)
    if (t < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
  HypersphericalValues<T> v;
  long sum_tau = 0;
  for (int t : tau) sum_tau += t;
  const T snu = m.sum_signed_nu(1, n);
  v.energy = m.s * (T(2 * tau_r) + T(2 * sum_tau) + snu + T(n));
  v.two_nu = T(2 * sum_tau) + snu + T(n - 1);
  v.energy_radial_form = m.s * (T(2 * tau_r) + v.two_nu + T(1));
  for (int l = 1; l <= n - 1; ++l) {
    long tail = 0;
    for (int i = l; i <= n - 1; ++i) tail += tau[i - 1];
    const T base = T(2 * tail) + m.sum_signed_nu(l, n);
    const T mu = base + T(n - l);
    v.mu.push_back(mu);
    v.k.push_back(mu * mu - ratio<T>((n - l - 1) * (n - l - 1), 4));
    v.mu_quoted.push_back(base + ratio<T>(n - l - 2, 2));
  }
  return v;
}

template <class T>
std::vector<T> hyperspherical_energies(const Model<T>& m, int n_max) {
  std::vector<T> out;
  for_each_tuple(m.n, n_max, [&](const std::vector<int>& q) {
    std::vector<int> tau(q.begin() + 1, q.end());
    out.push_back(spectrum_hyperspherical(m, q[0], tau).energy);
  });
  return out;
}

// Energies written through the radial form sqrt(2b)(2 tau_r + 2 nu + 1).
template <class T>
std::vector<T> radial_form_energies(const Model<T>& m, int n_max) {
  std::vector<T> out;
  for_each_tuple(m.n, n_max, [&](const std::vector<int>& q) {
    std::vector<int> tau(q.begin() + 1, q.end());
    out.push_back(spectrum_hyperspherical(m, q[0], tau).energy_radial_form);
  });
  return out;
}

// Derivation from the {B_i, A_ij, C_ij} substructures: for each i the
// finite-dimensionality constraints on the four-root family fix u_i, and the
// linear eigenvalue law gives e(B_i)(q) = sqrt(epsilon)(q + u_i); 2H = sum B_i.
template <class T>
struct SubstructureDerivation {
  std::vector<T> u;                  // u_i per coordinate
  std::vector<T> x_constraint;       // eigenvalue of 2H - sum_{k != i,j} B_k at p = 0
  std::vector<NumberOperatorLaw<T>> laws;
  std::vector<bool> positivity_ok;
};

template <class T>
std::map<Var, T> numeric_symbols(const Model<T>& m) {
  std::map<Var, T> v;
  v[Var::s()] = m.s;
  for (int i = 1; i <= m.n; ++i) v[Var::a(i)] = m.a[i - 1];
  return v;
}

template <class T>
SubstructureDerivation<T> derive_substructure(const Model<T>& m, int p_max) {
  const int n = m.n;
  if (n < 2) throw std::invalid_argument("substructure derivation needs N >= 2");
  SubstructureDerivation<T> out;
  for (int i = 1; i <= n; ++i) {
    const int j = i % n + 1;
    const auto roots = sal1_roots(m.nu[i - 1], m.nu[j - 1], m.s);
    const std::size_t want_u = m.branch[i - 1] > 0 ? 1 : 0;
    const auto sols = solve_constraints(roots, p_max);
    // The end root must keep Phi positive for every dimension up to p_max;
    // report the p = 0 solution of the first such root.
    const ConstraintSolution<T>* pick = nullptr;
    for (std::size_t end : {std::size_t{2}, std::size_t{3}}) {
      const ConstraintSolution<T>* first = nullptr;
      bool all_positive = true;
      for (const auto& s : sols) {
        if (s.u_root != want_u || s.end_root != end) continue;
        all_positive = all_positive && s.positivity_ok;
        if (s.p == 0) first = &s;
      }
      if (first && all_positive) {
        pick = first;
        break;
      }
    }
    if (!pick) throw std::runtime_error("no admissible finite-dimensional solution for substructure " +
                                        std::to_string(i) + "," + std::to_string(j));
    out.u.push_back(pick->u);
    out.x_constraint.push_back(pick->t);
    out.positivity_ok.push_back(pick->positivity_ok);
    auto values = numeric_symbols(m);
    values[Var::h()] = T(0);
    for (int k = 1; k <= n; ++k) values[Var::beta(k)] = T(0);
    const auto c = evaluate_constants(sal1_constants(n, i, j), values);
    out.laws.push_back(NumberOperatorLaw<T>::from(c, pick->u));
  }
  return out;
}

template <class T>
std::vector<T> substructure_energies(const Model<T>& m, int n_max, int p_max = 8) {
  const auto der = derive_substructure(m, p_max);
  std::vector<T> out;
  for_each_tuple(m.n, n_max, [&](const std::vector<int>& q) {
    T sum_b(0);
    for (int i = 0; i < m.n; ++i) sum_b += der.laws[i](q[i]);
    out.push_back(sum_b / T(2));
  });
  return out;
}

// Racah-chain derivation for quantum numbers q_1..q_{N-1} and p_N.
template <class T>
struct RacahValues {
  std::vector<T> z;   // z_0 .. z_{N-2}
  std::vector<T> u;   // u_2 .. u_{N-1}, then u_N
  T energy{};         // e(H) from the Y_1/B_N constraints
  T energy_closed{};  // sqrt(2b)(2 p_N + 2 sum q + sum eps nu + N)
  T e_z_quoted{};     // [2p_N + 2 sum q + sum nu + N]^2 + (3N-4)/4 - 2 sum a
  T e_y1_top{};       // e(Y_1) from the quadratic eigenvalue law at n_N = p_N
  bool positivity_ok = false;
};

template <class T>
RacahValues<T> racah_spectrum(const Model<T>& m, const std::vector<int>& q, int p_n) {
  const int n = m.n;
  if (n < 2) throw std::invalid_argument("Racah chain needs N >= 2");
  if (static_cast<int>(q.size()) != n - 1) throw std::invalid_argument("need q_1..q_{N-1}");
  if (p_n < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
  for (int v : q)
    if (v < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
  RacahValues<T> r;
  auto values = numeric_symbols(m);
  // Seed: Z_1 = A_12 carries q_1 through z_0 = 4 q_1 + 2 eps_1 nu_1.
  T z = T(4 * q[0]) + T(2) * m.signed_nu(1);
  r.z.push_back(z);
  for (int i = 2; i <= n - 1; ++i) {
    const T u = (T(2) + z + T(2) * m.signed_nu(i)) / T(4);
    r.u.push_back(u);
    values[Var::y(1)] = T(0);
    if (i + 1 <= n - 1) values[Var::y(i + 1)] = T(0);
    if (i - 2 >= 1) values[Var::z(i - 2)] = T(0);
    const auto c = evaluate_constants(zal2_constants(n, i), values);
    const T e_z = NumberOperatorLaw<T>::from(c, u)(q[i - 1]);
    // e(Z_{i-1}) = (3(i+1) - 7 - 8 sum_{j<=i} a_j + z_{i-1}^2) / 4
    const T z2 = T(4) * e_z - T(3 * (i + 1) - 7) + T(8) * m.sum_a(1, i);
    z = scalar_sqrt(z2);
    r.z.push_back(z);
  }
  const auto roots = yal1_roots(z, m.nu[n - 1], m.s);
  const std::size_t want_u = m.branch[n - 1] > 0 ? 5 : 4;
  const std::size_t want_end = 1;
  const auto sols = solve_constraints(roots, p_n);
  const ConstraintSolution<T>* pick = nullptr;
  for (const auto& s : sols)
    if (s.u_root == want_u && s.end_root == want_end && s.p == p_n) pick = &s;
  if (!pick) throw std::runtime_error("no finite-dimensional solution for the Y_1/B_N substructure");
  r.u.push_back(pick->u);
  r.energy = pick->t;
  long sum_q = 0;
  for (int v : q) sum_q += v;
  const T snu = m.sum_signed_nu(1, n);
  r.energy_closed = m.s * (T(2 * p_n) + T(2 * sum_q) + snu + T(n));
  const T base = T(2 * p_n) + T(2 * sum_q) + snu + T(n);
  r.e_z_quoted = base * base + ratio<T>(3 * n - 4, 4) - T(2) * m.sum_a(1, n);
  values[Var::h()] = r.energy;
  if (n - 2 >= 1) values[Var::z(n - 2)] = T(0);
  const auto cy = evaluate_constants(yal1_constants(n), values);
  r.e_y1_top = NumberOperatorLaw<T>::from(cy, pick->u)(p_n);
  // Positivity on the structure function itself; its normalization relative to
  // the six-root product is negative.
  auto full = numeric_symbols(m);
  full[Var::h()] = r.energy;
  if (n - 2 >= 1) full[Var::z(n - 2)] = (T(3 * n - 7) - T(8) * m.sum_a(1, n - 1) + z * z) / T(4);
  const auto phi = structure_function_gammaNZ(evaluate_constants(yal1_constants(n), full),
                                              yal1_casimir_central(n).evaluate(full), GammaNZVariant::Corrected);
  r.positivity_ok = true;
  for (int k = 1; k <= p_n; ++k) r.positivity_ok = r.positivity_ok && phi(T(k) + pick->u) > T(0);
  return r;
}

template <class T>
std::vector<T> racah_energies(const Model<T>& m, int n_max) {
  std::vector<T> out;
  for_each_tuple(m.n, n_max, [&](const std::vector<int>& t) {
    std::vector<int> q(t.begin(), t.end() - 1);
    out.push_back(racah_spectrum(m, q, t.back()).energy);
  });
  return out;
}

// e(Z) from the hyperspherical separation constant k_1.
template <class T>
T hyperspherical_e_z(const Model<T>& m, int total_angular) {
  std::vector<int> tau(m.n - 1, 0);
  tau[0] = total_angular;
  const auto v = spectrum_hyperspherical(m, 0, tau);
  return v.k[0] - T(2) * m.sum_a(1, m.n) + ratio<T>(m.n * (m.n - 1), 4);
}

struct MultisetComparison {
  bool equal = false;
  std::size_t size_left = 0, size_right = 0;
  long double max_rel_diff = 0;
};

template <class T>
MultisetComparison compare_multisets(std::vector<T> l, std::vector<T> r, long double rel) {
  MultisetComparison c;
  c.size_left = l.size();
  c.size_right = r.size();
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  c.equal = l.size() == r.size();
  for (std::size_t k = 0; k < std::min(l.size(), r.size()); ++k) {
    const long double a = as_long_double(l[k]), b = as_long_double(r[k]);
    const long double d = std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300L});
    if constexpr (std::is_same_v<T, Rational>) {
      if (l[k] != r[k]) c.equal = false;
    } else {
      if (d > rel) c.equal = false;
    }
    c.max_rel_diff = std::max(c.max_rel_diff, d);
  }
  return c;
}

}  // namespace swalg
