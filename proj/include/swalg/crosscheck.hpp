#pragma once

#include <string>
#include <vector>

#include "swalg/spectrum.hpp"
#include "swalg/structure_function.hpp"

namespace swalg {

// Pointwise comparison of a structure function with a reference product:
// ratio_k = phi(xi_k) / ref(xi_k), proportional when every ratio agrees with
// the first to `tol` relative.
struct Proportionality {
  std::string name;
  std::vector<int> indices;
  std::string variant;
  std::vector<long double> ratios;
  long double constant = 0;
  long double spread = 0;
  bool proportional = false;
  bool exact = false;
};

template <class T, class Ref>
Proportionality compare_pointwise(const UniPoly<T>& phi, Ref&& ref, const std::vector<T>& points, long double tol) {
  Proportionality p;
  p.exact = std::is_same_v<T, Rational>;
  bool first = true;
  T first_ratio{};
  p.proportional = !points.empty();
  for (const auto& xi : points) {
    const T r = ref(xi);
    if (r == T(0)) throw std::invalid_argument("reference vanishes at a comparison point");
    const T q = T(phi(xi) / r);
    p.ratios.push_back(as_long_double(q));
    if (first) {
      first_ratio = q;
      first = false;
      continue;
    }
    const long double a = as_long_double(q), b = as_long_double(first_ratio);
    p.spread = std::max(p.spread, std::fabs(a - b) / std::max(std::fabs(b), 1e-300L));
    if constexpr (std::is_same_v<T, Rational>)
      p.proportional = p.proportional && q == first_ratio;
    else
      p.proportional = p.proportional && close_rel(q, first_ratio, tol);
  }
  p.constant = p.ratios.empty() ? 0 : p.ratios.front();
  return p;
}

// gamma = 0 structure function of {B_i, A_ij, C_ij} against the quoted
// four-factor product at xi = n + u, n = 1..points, with the constraint
// X = 2s(2(p+1) + eps_i nu_i + nu_j) on 2H - sum_{k != i,j} B_k.
template <class T>
Proportionality sal1_gamma0_crosscheck(const Model<T>& m, int i, int j, int p, int points, long double tol = 1e-10L) {
  if (points < 1 || p + 1 <= points) throw std::invalid_argument("need 1 <= points <= p so no point is a root");
  const T nu_i = m.nu[i - 1], nu_j = m.nu[j - 1];
  const T x = T(2) * m.s * (T(2 * (p + 1)) + m.signed_nu(i) + nu_j);
  auto values = numeric_symbols(m);
  values[Var::h()] = x / T(2);
  for (int k = 1; k <= m.n; ++k)
    if (k != i && k != j) values[Var::beta(k)] = T(0);
  const auto c = evaluate_constants(sal1_constants(m.n, i, j), values);
  const T k = sal1_casimir_central(m.n, i, j).evaluate(values);
  const auto phi = structure_function_gamma0(c, k);
  const T u = half<T>() + m.signed_nu(i) / T(2);
  std::vector<T> xs;
  for (int n = 1; n <= points; ++n) xs.push_back(T(n) + u);
  auto out = compare_pointwise(
      phi, [&](const T& xi) { return sal1_factorized_quoted(xi, nu_i, nu_j, m.s, x); }, xs, tol);
  out.name = "structure function gamma=0 vs factorized";
  out.indices = {i, j};
  out.variant = "quoted";
  return out;
}

// Eigenvalue of Z_{l} written through its root parameter z:
// (3(l+2) - 7 - 8 sum_{k <= l+1} a_k + z^2) / 4.
template <class T>
T z_eigenvalue(const Model<T>& m, int l, const T& z) {
  return (T(3 * (l + 2) - 7) - T(8) * m.sum_a(1, l + 1) + z * z) / T(4);
}

// Eigenvalue of Y_p through its root parameter y:
// (3(N - p + 1) - 4 - 8 sum_{k >= p} a_k + y^2) / 4.
template <class T>
T y_eigenvalue(const Model<T>& m, int p, const T& y) {
  return (T(3 * (m.n - p + 1) - 4) - T(8) * m.sum_a(p, m.n) + y * y) / T(4);
}

// gamma != 0 structure function of {Z_{i-1}, Y_i, C_i} against the eight-root
// product at xi = k + 1/3, k = 0..points-1. y1 and (for i >= 3) zm are free
// root parameters; Z_0 = 0 forces zm = 2 nu_1 and Y_N = 0 forces y' = 2 nu_N.
template <class T>
Proportionality zal2_crosscheck(const Model<T>& m, int i, const T& y1, const T& y_next, const T& zm_free,
                                GammaNZVariant variant, int points, long double tol = 1e-8L) {
  const int n = m.n;
  if (i < 2 || i > n - 1) throw std::invalid_argument("chain index must be in 2..N-1");
  const T zm = i == 2 ? T(T(2) * m.nu[0]) : zm_free;
  const T yn = i + 1 >= n ? T(T(2) * m.nu[n - 1]) : y_next;
  auto values = numeric_symbols(m);
  values[Var::y(1)] = y_eigenvalue(m, 1, y1);
  if (i + 1 <= n - 1) values[Var::y(i + 1)] = y_eigenvalue(m, i + 1, yn);
  if (i - 2 >= 1) values[Var::z(i - 2)] = z_eigenvalue(m, i - 2, zm);
  const auto c = evaluate_constants(zal2_constants(n, i), values);
  const T k = zal2_casimir_central(n, i).evaluate(values);
  const auto phi = structure_function_gammaNZ(c, k, variant);
  const auto prod = product_of_roots(zal2_roots(y1, yn, zm, m.nu[i - 1]), T(0));
  std::vector<T> xs;
  for (int p = 0; p < points; ++p) xs.push_back(T(p) + ratio<T>(1, 3));
  auto out = compare_pointwise(phi, [&](const T& xi) { return prod(xi); }, xs, tol);
  out.name = "structure function gamma!=0 vs eight-root product";
  out.indices = {i};
  out.variant = variant == GammaNZVariant::Printed ? "printed" : "corrected";
  return out;
}

// Same for {Y_1, B_N, D}: six roots, free central h and root parameter zm of
// Z_{N-2} (forced to 2 nu_1 when N = 2).
template <class T>
Proportionality yal1_crosscheck(const Model<T>& m, const T& h, const T& zm_free, GammaNZVariant variant, int points,
                                long double tol = 1e-8L) {
  const int n = m.n;
  const T zm = n == 2 ? T(T(2) * m.nu[0]) : zm_free;
  auto values = numeric_symbols(m);
  values[Var::h()] = h;
  if (n - 2 >= 1) values[Var::z(n - 2)] = z_eigenvalue(m, n - 2, zm);
  const auto c = evaluate_constants(yal1_constants(n), values);
  const T k = yal1_casimir_central(n).evaluate(values);
  const auto phi = structure_function_gammaNZ(c, k, variant);
  const auto prod = product_of_roots(yal1_roots(zm, m.nu[n - 1], m.s), h);
  std::vector<T> xs;
  for (int p = 0; p < points; ++p) xs.push_back(T(p) + ratio<T>(1, 3));
  auto out = compare_pointwise(phi, [&](const T& xi) { return prod(xi); }, xs, tol);
  out.name = "structure function gamma!=0 vs six-root product";
  out.indices = {n};
  out.variant = variant == GammaNZVariant::Printed ? "printed" : "corrected";
  return out;
}

}  // namespace swalg
