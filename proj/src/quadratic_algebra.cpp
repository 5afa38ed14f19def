#include "swalg/quadratic_algebra.hpp"

#include <stdexcept>

namespace swalg {

namespace {

ParamPoly sum_a(int from, int to) {
  ParamPoly out;
  for (int j = from; j <= to; ++j) out += ParamPoly::a(j);
  return out;
}

// 8 sum_{j=from}^{to} a_j - 3 (to - from + 1); zero for an empty range.
ParamPoly shifted_sum(int from, int to) {
  if (to < from) return ParamPoly();
  return ParamPoly(8) * sum_a(from, to) - ParamPoly(3 * (to - from + 1));
}

ParamPoly p8(int i) { return ParamPoly(8) * ParamPoly::a(i) - ParamPoly(3); }

bool is_central(VarKind k) { return k == VarKind::H || k == VarKind::Beta || k == VarKind::Y || k == VarKind::Z; }

void check_pair(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("substructure needs distinct indices in 1..N");
}

}  // namespace

ParamPoly y_symbol(int n, int p) {
  if (p >= n) return ParamPoly();
  return ParamPoly::var(Var::y(p));
}

ParamPoly z_symbol(int l) {
  if (l <= 0) return ParamPoly();
  return ParamPoly::var(Var::z(l));
}

ParamPoly sal1_central(int n, int i, int j) {
  ParamPoly x = ParamPoly(2) * ParamPoly::var(Var::h());
  for (int k = 1; k <= n; ++k)
    if (k != i && k != j) x -= ParamPoly::var(Var::beta(k));
  return x;
}

QuadAlgConstants sal1_constants(int n, int i, int j) {
  check_pair(n, i, j);
  const ParamPoly x = sal1_central(n, i, j);
  QuadAlgConstants c;
  c.alpha = 8;
  c.gamma = 0;
  c.delta = ParamPoly(-8) * x;
  c.epsilon = ParamPoly(32) * ParamPoly::b();
  c.zeta = 0;
  c.a = 0;
  c.d = ParamPoly(-8) * (ParamPoly(4) * ParamPoly::a(i) + ParamPoly(4) * ParamPoly::a(j) - ParamPoly(3));
  c.z = ParamPoly(4) * p8(i) * x;
  return c;
}

QuadAlgConstants zal2_constants(int n, int i) {
  if (i < 2 || i > n - 1) throw std::invalid_argument("Racah substructure index must satisfy 2 <= i <= N-1");
  const ParamPoly y1 = y_symbol(n, 1), yn = y_symbol(n, i + 1), zm = z_symbol(i - 2);
  QuadAlgConstants c;
  c.alpha = 8;
  c.gamma = 8;
  c.delta = ParamPoly(-8) * (y1 + yn + zm - ParamPoly(4) * ParamPoly::a(i) + make_rational(3, 2));
  c.epsilon = ParamPoly(4) * shifted_sum(1, i);
  c.zeta = ParamPoly(-4) * p8(i) * y1 - ParamPoly(4) * shifted_sum(1, i - 1) * yn + ParamPoly(8) * y1 * zm -
           ParamPoly(8) * yn * zm;
  c.a = 0;
  c.d = ParamPoly(-4) * shifted_sum(i, n);
  c.z = ParamPoly(4) * p8(i) * y1 + ParamPoly(4) * shifted_sum(i + 1, n) * zm - ParamPoly(8) * y1 * yn +
        ParamPoly(8) * yn * zm;
  return c;
}

QuadAlgConstants yal1_constants(int n) {
  if (n < 2) throw std::invalid_argument("Y_1/B_N substructure needs N >= 2");
  const ParamPoly h = ParamPoly::var(Var::h()), zm = z_symbol(n - 2);
  QuadAlgConstants c;
  c.alpha = 0;
  c.gamma = 8;
  c.delta = ParamPoly(-16) * h;
  c.epsilon = ParamPoly(4) * shifted_sum(1, n);
  c.zeta = ParamPoly(16) * h * zm - ParamPoly(8) * p8(n) * h;
  c.a = 0;
  c.d = ParamPoly(-32) * ParamPoly::b();
  c.z = ParamPoly(32) * ParamPoly::b() * zm;
  return c;
}

ParamPoly sal1_casimir_central(int n, int i, int j) {
  check_pair(n, i, j);
  const ParamPoly x = sal1_central(n, i, j);
  return ParamPoly(4) * p8(i) * x * x - ParamPoly(8) * ParamPoly::b() * p8(i) * p8(j);
}

ParamPoly zal2_casimir_central(int n, int i) {
  if (i < 2 || i > n - 1) throw std::invalid_argument("Racah substructure index must satisfy 2 <= i <= N-1");
  const ParamPoly y1 = y_symbol(n, 1), yn = y_symbol(n, i + 1), zm = z_symbol(i - 2);
  const ParamPoly pi = p8(i), lo = shifted_sum(1, i - 1), hi = shifted_sum(i + 1, n);
  ParamPoly k = ParamPoly(4) * pi * y1 * y1 - ParamPoly(64) * y1 * yn + ParamPoly(4) * lo * yn * yn +
                ParamPoly(32) * pi * y1;
  k += ParamPoly(-4) * pi * lo * yn + ParamPoly(16) * zm * zm * yn - ParamPoly(64) * zm * y1 -
       ParamPoly(16) * pi * zm * yn;
  k += ParamPoly(-4) * pi * hi * zm + ParamPoly(4) * hi * zm * zm;
  k += ParamPoly(-16) * zm * y1 * yn + ParamPoly(16) * zm * yn * yn - pi * lo * hi;
  return k;
}

ParamPoly yal1_casimir_central(int n) {
  if (n < 2) throw std::invalid_argument("Y_1/B_N substructure needs N >= 2");
  const ParamPoly h = ParamPoly::var(Var::h()), zm = z_symbol(n - 2), b = ParamPoly::b();
  return ParamPoly(32) * b * zm * zm + ParamPoly(16) * p8(n) * h * h - ParamPoly(32) * b * p8(n) * zm -
         ParamPoly(8) * b * p8(n) * shifted_sum(1, n - 1);
}

std::map<Var, Operator> central_operators(const GeneratorSet& g) {
  const int n = g.dim();
  std::map<Var, Operator> m;
  m.emplace(Var::h(), g.H());
  for (int k = 1; k <= n; ++k) m.emplace(Var::beta(k), g.B(k));
  for (int p = 1; p <= n - 1; ++p) m.emplace(Var::y(p), g.Yp(p));
  for (int l = 1; l <= n - 1 && l <= 6; ++l) m.emplace(Var::z(l), g.Zl(l));
  return m;
}

Operator to_operator(const ParamPoly& p, const std::map<Var, Operator>& central, int dim) {
  Operator out(dim);
  for (const auto& [mono, coeff] : p.terms()) {
    ParamPoly scalar(coeff);
    Operator factor = Operator::identity(dim);
    for (int slot = 0; slot < kVarSlots; ++slot) {
      int e = mono.exponent_at(slot);
      if (e == 0) continue;
      Var v = Var::from_slot(slot);
      if (is_central(v.kind)) {
        auto it = central.find(v);
        if (it == central.end()) throw std::invalid_argument("no operator for central symbol " + v.name());
        factor = factor * it->second.pow(e);
      } else {
        scalar *= ParamPoly::var(v, e);
      }
    }
    out += scalar * factor;
  }
  return out;
}

Operator casimir_cubic(const QuadAlgConstants& c, const Operator& e, const Operator& f, const Operator& g,
                       const std::map<Var, Operator>& central) {
  const int n = e.dim();
  auto op = [&](const ParamPoly& p) { return to_operator(p, central, n); };
  const Operator e2 = e * e, f2 = f * f;
  Operator k = g * g;
  k -= op(c.alpha) * anticommutator(e2, f);
  k -= op(c.gamma) * anticommutator(e, f2);
  k += op(c.alpha * c.gamma - c.delta) * anticommutator(e, f);
  k += op(c.gamma * c.gamma - c.epsilon) * f2;
  k += op(c.gamma * c.delta - ParamPoly(2) * c.zeta) * f;
  k += op(make_rational(2, 3) * c.a) * (e2 * e);
  k += op(c.d + make_rational(1, 3) * c.a * c.gamma + c.alpha * c.alpha) * e2;
  k += op(make_rational(1, 3) * c.a * c.epsilon + c.alpha * c.delta + ParamPoly(2) * c.z) * e;
  return k;
}

Operator general_eg(const QuadAlgConstants& c, const Operator& e, const Operator& f,
                    const std::map<Var, Operator>& central) {
  const int n = e.dim();
  auto op = [&](const ParamPoly& p) { return to_operator(p, central, n); };
  return op(c.alpha) * (e * e) + op(c.gamma) * anticommutator(e, f) + op(c.delta) * e + op(c.epsilon) * f +
         op(c.zeta);
}

Operator general_fg(const QuadAlgConstants& c, const Operator& e, const Operator& f,
                    const std::map<Var, Operator>& central) {
  const int n = e.dim();
  auto op = [&](const ParamPoly& p) { return to_operator(p, central, n); };
  return op(c.a) * (e * e) - op(c.gamma) * (f * f) - op(c.alpha) * anticommutator(e, f) + op(c.d) * e -
         op(c.delta) * f + op(c.z);
}

Operator sal1_casimir_quoted(const GeneratorSet& g, int i, int j) {
  const int n = g.dim();
  check_pair(n, i, j);
  const Operator x = to_operator(sal1_central(n, i, j), central_operators(g), n);
  const Operator& bi = g.B(i);
  const Operator& aij = g.A(i, j);
  const Operator& cij = g.C(i, j);
  const Operator bi2 = bi * bi;
  Operator k = cij * cij;
  k -= ParamPoly(8) * anticommutator(bi2, aij);
  k += ParamPoly(8) * (x * anticommutator(bi, aij));
  k -= ParamPoly(8) * (ParamPoly(4) * ParamPoly::a(i) + ParamPoly(4) * ParamPoly::a(j) - ParamPoly(11)) * bi2;
  k += ParamPoly(8) * (ParamPoly(8) * ParamPoly::a(i) - ParamPoly(11)) * (x * bi);
  k -= ParamPoly(32) * ParamPoly::b() * (aij * aij);
  return k;
}

}  // namespace swalg
