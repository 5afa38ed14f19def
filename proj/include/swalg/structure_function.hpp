#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalg/quadratic_algebra.hpp"
#include "swalg/scalar.hpp"

namespace swalg {

// Dense univariate polynomial, coefficient k multiplies x^k.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static UniPoly constant(const T& v) { return UniPoly(std::vector<T>{v}); }
  static UniPoly x() { return UniPoly(std::vector<T>{T(0), T(1)}); }
  // x - r
  static UniPoly linear(const T& r) { return UniPoly(std::vector<T>{T(-r), T(1)}); }

  const std::vector<T>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  T operator()(const T& v) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& l, const UniPoly& r) {
    std::vector<T> c(std::max(l.c_.size(), r.c_.size()), T(0));
    for (std::size_t k = 0; k < l.c_.size(); ++k) c[k] += l.c_[k];
    for (std::size_t k = 0; k < r.c_.size(); ++k) c[k] += r.c_[k];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& l, const UniPoly& r) { return l + r * T(-1); }
  friend UniPoly operator*(const UniPoly& l, const UniPoly& r) {
    if (l.c_.empty() || r.c_.empty()) return UniPoly();
    std::vector<T> c(l.c_.size() + r.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i)
      for (std::size_t j = 0; j < r.c_.size(); ++j) c[i + j] += l.c_[i] * r.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(UniPoly p, const T& s) {
    for (auto& v : p.c_) v *= s;
    p.trim();
    return p;
  }
  friend UniPoly operator*(const T& s, UniPoly p) { return std::move(p) * s; }

  UniPoly pow(int e) const {
    UniPoly out = constant(T(1));
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

// Structure constants after every symbol has a numeric value.
template <class T>
struct NumericConstants {
  T alpha{}, gamma{}, delta{}, epsilon{}, zeta{}, a{}, d{}, z{};
};

template <class T>
NumericConstants<T> evaluate_constants(const QuadAlgConstants& c, const std::map<Var, T>& values) {
  return {c.alpha.evaluate(values), c.gamma.evaluate(values), c.delta.evaluate(values), c.epsilon.evaluate(values),
          c.zeta.evaluate(values),  c.a.evaluate(values),     c.d.evaluate(values),     c.z.evaluate(values)};
}

// Structure function in xi = n + u for gamma = 0, epsilon != 0, with K the
// Casimir value expressed through central elements.
template <class T>
UniPoly<T> structure_function_gamma0(const NumericConstants<T>& c, const T& k) {
  if (c.gamma != T(0)) throw std::invalid_argument("gamma must vanish for this branch");
  if (c.epsilon == T(0)) throw std::invalid_argument("epsilon must be nonzero for this branch");
  const T& al = c.alpha;
  const T re = scalar_sqrt(c.epsilon);
  const T zeta_e = c.zeta / c.epsilon;
  const T delta_r = c.delta / re;
  const T c0 = ratio<T>(1, 4) * (-k / c.epsilon - c.z / re - delta_r * zeta_e + zeta_e * zeta_e);
  const T c1 = ratio<T>(-1, 12) * (T(3) * c.d - c.a * re - T(3) * al * delta_r + T(3) * c.delta * c.delta / c.epsilon -
                                  T(6) * c.z / re + T(6) * al * zeta_e - T(6) * delta_r * zeta_e);
  const T c2 = ratio<T>(1, 4) * (al * al + c.d - c.a * re - T(3) * al * delta_r + c.delta * c.delta / c.epsilon +
                                 T(2) * al * zeta_e);
  const T c3 = ratio<T>(-1, 6) * (T(3) * al * al - c.a * re - T(3) * al * delta_r);
  const T c4 = ratio<T>(1, 4) * al * al;
  return UniPoly<T>(std::vector<T>{c0, c1, c2, c3, c4});
}

enum class GammaNZVariant {
  Printed,    // exactly as quoted, including [2xi+1]^2 in the third term
  Corrected,  // [2xi+1] to the first power in the third term
};

// Structure function in xi = n + u for gamma != 0.
template <class T>
UniPoly<T> structure_function_gammaNZ(const NumericConstants<T>& c, const T& k,
                                      GammaNZVariant variant = GammaNZVariant::Printed) {
  if (c.gamma == T(0)) throw std::invalid_argument("gamma must be nonzero for this branch");
  const T& al = c.alpha;
  const T& g = c.gamma;
  const T& e = c.epsilon;
  const T& dl = c.delta;
  const T& ze = c.zeta;
  const T& aa = c.a;
  const T& d = c.d;
  const T& z = c.z;
  auto pw = [](const T& v, int p) {
    T out(1);
    for (int q = 0; q < p; ++q) out *= v;
    return out;
  };
  using P = UniPoly<T>;
  const P xi = P::x();
  const P tm3 = xi * T(2) - P::constant(T(3));
  const P tm1 = xi * T(2) - P::constant(T(1));
  const P tp1 = xi * T(2) + P::constant(T(1));
  const P quad = xi * xi * T(12) - xi * T(12) - P::constant(T(1));

  P out = P::constant(pw(g, 8) * (T(3) * al * al + T(4) * aa * g)) * tm3.pow(2) * tm1.pow(4) * tp1.pow(2);
  out = out - P::constant(T(3072) * pw(g, 6) * k) * tm1.pow(2);
  const int tp1_power = variant == GammaNZVariant::Printed ? 2 : 1;
  out = out - P::constant(T(48) * pw(g, 6) * (al * al * e - al * g * dl + aa * g * e - g * g * d)) * tm1.pow(4) *
                  tp1.pow(tp1_power) * tm3;
  const T k4 = T(3) * al * al * e * e + T(4) * al * g * g * ze - T(6) * al * g * dl * e + T(2) * aa * g * e * e +
               T(2) * g * g * dl * dl - T(4) * g * g * d * e + T(8) * pw(g, 3) * z;
  out = out + P::constant(T(32) * pw(g, 4) * k4) * tm1.pow(2) * quad;
  const T k5 = al * e * e + T(4) * g * g * ze - T(2) * g * dl * e;
  out = out + P::constant(T(768) * k5 * k5);
  const T k6 = T(3) * al * al * pw(e, 3) + T(4) * al * pw(g, 4) * ze + T(12) * al * g * g * ze * e -
               T(9) * al * g * dl * e * e + aa * g * pw(e, 3) + T(2) * pw(g, 4) * dl * dl - T(12) * pw(g, 3) * dl * ze +
               T(6) * g * g * dl * dl * e + T(2) * pw(g, 4) * d * e - T(3) * g * g * d * e * e - T(4) * pw(g, 5) * z +
               T(12) * pw(g, 3) * z * e;
  out = out - P::constant(T(256) * g * g * k6) * tm1.pow(2);
  return out;
}

// Root of a structure function, affine in one unknown central eigenvalue t:
// root = c + d * t.
template <class T>
struct AffineRoot {
  T c{}, d{};
  std::string label;
  T at(const T& t) const { return c + d * t; }
};

template <class T>
UniPoly<T> product_of_roots(const std::vector<AffineRoot<T>>& roots, const T& t) {
  UniPoly<T> p = UniPoly<T>::constant(T(1));
  for (const auto& r : roots) p = p * UniPoly<T>::linear(r.at(t));
  return p;
}

// Roots in xi of the four-factor product for {B_i, A_ij, C_ij}; the unknown is
// the eigenvalue X of 2H - sum_{k != i,j} B_k. nu_i, nu_j > 0.
template <class T>
std::vector<AffineRoot<T>> sal1_roots(const T& nu_i, const T& nu_j, const T& s) {
  const T h = half<T>();
  const T slope = T(1) / (T(4) * s);
  return {{h - nu_i / T(2), T(0), "(1-nu_i)/2"},
          {h + nu_i / T(2), T(0), "(1+nu_i)/2"},
          {h - nu_j / T(2), slope, "(1-nu_j)/2+X/(4s)"},
          {h + nu_j / T(2), slope, "(1+nu_j)/2+X/(4s)"}};
}

// The quoted four-factor product with its 1/(1024 b^2) prefactor, evaluated
// at xi for central value X.
template <class T>
T sal1_factorized_quoted(const T& xi, const T& nu_i, const T& nu_j, const T& s, const T& x) {
  const T b = s * s / T(2);
  const T f1 = T(4) * xi - T(2) - T(2) * nu_i;
  const T f2 = T(4) * xi - T(2) + T(2) * nu_i;
  const T f3 = T(8) * b * xi - T(4) * b + T(4) * b * nu_j - s * x;
  const T f4 = T(8) * b * xi - T(4) * b - T(4) * b * nu_j - s * x;
  return f1 * f2 * f3 * f4 / (T(1024) * b * b);
}

// Eight roots for {Z_{i-1}, Y_i, C_i}: (2 -+ y1 -+ y_{i+1})/4 and
// (2 +- z_{i-2} +- 2 nu_i)/4. No unknown (d = 0).
template <class T>
std::vector<AffineRoot<T>> zal2_roots(const T& y1, const T& yn, const T& zm, const T& nu) {
  std::vector<AffineRoot<T>> r;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      r.push_back({(T(2) + T(s1) * y1 + T(s2) * yn) / T(4), T(0),
                   std::string("(2") + (s1 < 0 ? "-" : "+") + "y1" + (s2 < 0 ? "-" : "+") + "y')/4"});
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      r.push_back({(T(2) + T(s1) * zm + T(2 * s2) * nu) / T(4), T(0),
                   std::string("(2") + (s1 < 0 ? "-" : "+") + "z" + (s2 < 0 ? "-" : "+") + "2nu)/4"});
  return r;
}

// Six roots for {Y_1, B_N, D}: (2 -+ sqrt(2/b) h)/4 with the unknown t = h,
// and (2 +- z_{N-2} +- 2 nu_N)/4. sqrt(2/b) = 2/s.
template <class T>
std::vector<AffineRoot<T>> yal1_roots(const T& zm, const T& nu, const T& s) {
  std::vector<AffineRoot<T>> r;
  r.push_back({half<T>(), T(-1) / (T(2) * s), "(2-sqrt(2/b)h)/4"});
  r.push_back({half<T>(), T(1) / (T(2) * s), "(2+sqrt(2/b)h)/4"});
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      r.push_back({(T(2) + T(s1) * zm + T(2 * s2) * nu) / T(4), T(0),
                   std::string("(2") + (s1 < 0 ? "-" : "+") + "z" + (s2 < 0 ? "-" : "+") + "2nu)/4"});
  return r;
}

// Finite-dimensionality: Phi(0) = 0 picks u as one root, Phi(p+1) = 0 matches
// another root to u + p + 1, which fixes the unknown t when it enters.
// Positivity Phi(n) > 0 for 1 <= n <= p is checked on sign * product.
template <class T>
struct ConstraintSolution {
  T u{};
  int p = 0;
  T t{};
  bool t_determined = false;
  std::size_t u_root = 0, end_root = 0;
  bool positivity_ok = false;
};

template <class T>
std::vector<ConstraintSolution<T>> solve_constraints(const std::vector<AffineRoot<T>>& roots, int p_max,
                                                     int sign = 1, long double tol = 1e-10L) {
  std::vector<ConstraintSolution<T>> out;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (a == b) continue;
      const T dc = roots[b].c - roots[a].c;
      const T dd = roots[b].d - roots[a].d;
      for (int p = 0; p <= p_max; ++p) {
        ConstraintSolution<T> sol;
        sol.p = p;
        sol.u_root = a;
        sol.end_root = b;
        if (dd != T(0)) {
          sol.t = (T(p + 1) - dc) / dd;
          sol.t_determined = true;
        } else {
          if (!close_rel(dc, T(p + 1), tol)) continue;
          bool uses_t = false;
          for (const auto& r : roots) uses_t = uses_t || r.d != T(0);
          if (uses_t) continue;  // t left free; not a constraint solution
          sol.t = T(0);
        }
        sol.u = roots[a].at(sol.t);
        bool positive = true;
        for (int n = 1; n <= p && positive; ++n) {
          T v = T(sign);
          for (const auto& r : roots) v *= T(n) + sol.u - r.at(sol.t);
          positive = v > T(0);
        }
        sol.positivity_ok = positive;
        out.push_back(sol);
      }
    }
  }
  return out;
}

// Eigenvalue law of the diagonal generator in the oscillator realization.
enum class NumberLawMode { Linear, Quadratic };

template <class T>
struct NumberOperatorLaw {
  NumberLawMode mode = NumberLawMode::Linear;
  T gamma{}, epsilon{}, u{};

  static NumberOperatorLaw from(const NumericConstants<T>& c, const T& u) {
    NumberOperatorLaw law;
    law.mode = c.gamma == T(0) ? NumberLawMode::Linear : NumberLawMode::Quadratic;
    law.gamma = c.gamma;
    law.epsilon = c.epsilon;
    law.u = u;
    if (law.mode == NumberLawMode::Linear && c.epsilon == T(0))
      throw std::invalid_argument("linear eigenvalue law needs epsilon != 0");
    return law;
  }

  T operator()(int q) const {
    const T x = T(q) + u;
    if (mode == NumberLawMode::Linear) return scalar_sqrt(epsilon) * x;
    return gamma / T(2) * (x * x - epsilon / (gamma * gamma) - ratio<T>(1, 4));
  }
};

}  // namespace swalg
