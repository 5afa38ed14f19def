#include "swalg/relations.hpp"

#include <chrono>
#include <memory>
#include <stdexcept>
#include <random>

#include "swalg/parallel.hpp"
#include "swalg/quadratic_algebra.hpp"

namespace swalg {

namespace {

// Ordered k-tuples of pairwise distinct indices from 1..n, lexicographic.
std::vector<std::vector<int>> distinct_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  if (k <= n) rec();
  return out;
}

// Strictly increasing k-tuples.
std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  for (auto& t : distinct_tuples(n, k)) {
    bool inc = true;
    for (int q = 1; q < k; ++q) inc = inc && t[q - 1] < t[q];
    if (inc) out.push_back(t);
  }
  return out;
}

std::vector<std::vector<int>> limit(std::vector<std::vector<int>> tuples, Coverage c) {
  if (c == Coverage::Spot && tuples.size() > 1) tuples.resize(1);
  return tuples;
}

ParamPoly p8(int i) { return ParamPoly(8) * ParamPoly::a(i) - ParamPoly(3); }

Operator acomm(const Operator& a, const Operator& b) { return anticommutator(a, b); }

const ParamPoly kFour(4);

}  // namespace

std::vector<RelationCheck> run_tasks(const std::vector<RelationTask>& tasks) {
  std::vector<RelationCheck> out(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t k) {
    const auto& t = tasks[k];
    auto start = std::chrono::steady_clock::now();
    Operator r = t.residual();
    auto stop = std::chrono::steady_clock::now();
    RelationCheck c;
    c.name = t.name;
    c.indices = t.indices;
    c.passed = r.is_zero();
    c.term_count = r.size();
    c.residual = std::move(r);
    c.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    c.informational = t.informational;
    c.note = t.note;
    out[k] = std::move(c);
  });
  return out;
}

std::vector<RelationCheck> verify_sw_relations(const GeneratorSet& g, Coverage coverage) {
  const int n = g.dim();
  const GeneratorSet* G = &g;
  std::vector<RelationTask> tasks;
  auto add = [&](std::string name, std::vector<int> idx, std::function<Operator()> fn, bool info = false,
                 std::string note = {}) {
    tasks.push_back({std::move(name), std::move(idx), std::move(fn), info, std::move(note)});
  };

  add("2H - sum B_i", {}, [G, n] {
    Operator s = ParamPoly(2) * G->H();
    for (int i = 1; i <= n; ++i) s -= G->B(i);
    return s;
  });
  for (auto& t : limit(increasing_tuples(n, 1), coverage))
    add("[H,B_i]", t, [G, t] { return commutator(G->H(), G->B(t[0])); });
  for (auto& t : limit(increasing_tuples(n, 2), coverage))
    add("[H,A_ij]", t, [G, t] { return commutator(G->H(), G->A(t[0], t[1])); });
  for (auto& t : limit(increasing_tuples(n, 2), coverage))
    add("[B_i,B_j]", t, [G, t] { return commutator(G->B(t[0]), G->B(t[1])); });
  for (auto& t : limit(distinct_tuples(n, 3), coverage))
    if (t[0] < t[1]) add("[A_ij,B_k]", t, [G, t] { return commutator(G->A(t[0], t[1]), G->B(t[2])); });
  for (auto& t : limit(distinct_tuples(n, 2), coverage))
    add("[H,C_ij]", t, [G, t] { return commutator(G->H(), G->C(t[0], t[1])); });
  for (auto& t : limit(distinct_tuples(n, 3), coverage))
    add("[H,D_ijk]", t, [G, t] { return commutator(G->H(), G->D(t[0], t[1], t[2])); });

  // C_ij = [B_i,A_ij] equals [A_ij,B_j] because A_ij commutes with B_i + B_j.
  for (auto& t : limit(distinct_tuples(n, 2), coverage))
    add("[B_i,A_ij] - [A_ij,B_j]", t, [G, t] {
      return commutator(G->B(t[0]), G->A(t[0], t[1])) - commutator(G->A(t[0], t[1]), G->B(t[1]));
    });
  for (auto& t : limit(increasing_tuples(n, 2), coverage))
    add("[B_i,A_ij] - [B_j,A_ij] (literal)", t,
        [G, t] { return commutator(G->B(t[0]), G->A(t[0], t[1])) - commutator(G->B(t[1]), G->A(t[0], t[1])); },
        true, "literal symmetry reading; the identity that holds is [B_i,A_ij] = [A_ij,B_j]");

  for (auto& t : limit(increasing_tuples(n, 3), coverage)) {
    const int i = t[0], j = t[1], k = t[2];
    add("[A_ij,A_ki] - [A_ik,A_jk]", t,
        [G, i, j, k] { return commutator(G->A(i, j), G->A(k, i)) - commutator(G->A(i, k), G->A(j, k)); });
    add("[A_ik,A_jk] - [A_jk,A_ij]", t,
        [G, i, j, k] { return commutator(G->A(i, k), G->A(j, k)) - commutator(G->A(j, k), G->A(i, j)); });
    add("D_ijk - [A_ij,A_ki] (literal)", t, [G, i, j, k] { return G->D(i, j, k) - commutator(G->A(i, j), G->A(k, i)); },
        true, "the cyclic list equals -D_ijk when D_ijk = [A_ij,A_jk]");
    add("D_ijk + [A_ij,A_ki]", t, [G, i, j, k] { return G->D(i, j, k) + commutator(G->A(i, j), G->A(k, i)); });
  }

  for (auto& t : limit(distinct_tuples(n, 3), coverage)) {
    const int i = t[0], j = t[1], k = t[2];
    add("[A_jk,D_ijk]", t, [G, i, j, k] {
      return commutator(G->A(j, k), G->D(i, j, k)) -
             (kFour * acomm(G->A(i, k), G->A(j, k)) - kFour * acomm(G->A(j, k), G->A(i, j)) +
              kFour * p8(j) * G->A(i, k) - kFour * p8(k) * G->A(i, j));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 4), coverage)) {
    const int i = t[0], j = t[1], k = t[2], l = t[3];
    add("[A_kl,D_ijk]", t, [G, i, j, k, l] {
      return commutator(G->A(k, l), G->D(i, j, k)) -
             (kFour * acomm(G->A(i, k), G->A(j, l)) - kFour * acomm(G->A(j, k), G->A(i, l)));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 4), coverage)) {
    const int i = t[0], j = t[1], k = t[2], l = t[3];
    add("[D_ijk,D_jkl]", t, [G, i, j, k, l] {
      return commutator(G->D(i, j, k), G->D(j, k, l)) -
             (kFour * acomm(G->D(j, k, l), G->A(i, j)) - kFour * acomm(G->D(i, k, l), G->A(j, k)) -
              kFour * acomm(G->D(i, j, k), G->A(j, l)) - kFour * p8(j) * G->D(i, k, l));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 5), coverage)) {
    const int i = t[0], j = t[1], k = t[2], l = t[3], m = t[4];
    add("[D_ijk,D_klm]", t, [G, i, j, k, l, m] {
      return commutator(G->D(i, j, k), G->D(k, l, m)) -
             (kFour * acomm(G->D(i, l, m), G->A(j, k)) - kFour * acomm(G->D(j, l, m), G->A(i, k)));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 3), coverage)) {
    const int i = t[0], k = t[1], l = t[2];
    add("[C_ik,C_kl]", t,
        [G, i, k, l] { return commutator(G->C(i, k), G->C(k, l)) - kFour * acomm(G->C(l, i), G->B(k)); });
  }
  for (auto& t : limit(distinct_tuples(n, 3), coverage)) {
    const int i = t[0], j = t[1], k = t[2];
    add("[B_i,D_ijk]", t, [G, i, j, k] {
      return commutator(G->B(i), G->D(i, j, k)) -
             (kFour * acomm(G->B(k), G->A(i, j)) - kFour * acomm(G->B(j), G->A(i, k)));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 2), coverage)) {
    const int i = t[0], j = t[1];
    add("[B_i,C_ij]", t, [G, i, j] {
      return commutator(G->B(i), G->C(i, j)) -
             (ParamPoly(-4) * acomm(G->B(i), G->B(j)) + ParamPoly(32) * ParamPoly::b() * G->A(i, j));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 4), coverage)) {
    const int i = t[0], j = t[1], k = t[2], l = t[3];
    add("[C_ij,D_jkl]", t, [G, i, j, k, l] {
      return commutator(G->C(i, j), G->D(j, k, l)) -
             (kFour * acomm(G->C(i, l), G->A(j, k)) - kFour * acomm(G->C(i, k), G->A(j, l)));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 3), coverage)) {
    const int i = t[0], j = t[1], k = t[2];
    add("[C_ij,D_ijk]", t,
        [G, i, j, k] {
          return commutator(G->C(i, j), G->D(i, j, k)) -
                 (ParamPoly(-4) * acomm(G->C(i, k), G->A(i, j)) - kFour * acomm(G->C(j, k), G->A(i, j)));
        },
        false, "first bracket on the right read as the anticommutator {C_ik,A_ij}");
  }
  for (auto& t : limit(distinct_tuples(n, 2), coverage)) {
    const int i = t[0], j = t[1];
    add("[A_ij,C_ij]", t, [G, i, j] {
      return commutator(G->A(i, j), G->C(i, j)) -
             (kFour * acomm(G->A(i, j), G->B(j)) - kFour * acomm(G->A(i, j), G->B(i)) - kFour * p8(j) * G->B(i) +
              kFour * p8(i) * G->B(j));
    });
  }
  for (auto& t : limit(distinct_tuples(n, 3), coverage)) {
    const int i = t[0], j = t[1], k = t[2];
    add("[A_ij,C_ki]", t, [G, i, j, k] {
      return commutator(G->A(i, j), G->C(k, i)) -
             (kFour * acomm(G->A(k, j), G->B(i)) - kFour * acomm(G->A(i, k), G->B(j)));
    });
  }
  return run_tasks(tasks);
}

std::vector<RelationCheck> verify_substructure_Qij(const GeneratorSet& g, int i, int j) {
  const int n = g.dim();
  const GeneratorSet* G = &g;
  const auto central = std::make_shared<const std::map<Var, Operator>>(central_operators(g));
  const auto c = std::make_shared<const QuadAlgConstants>(sal1_constants(n, i, j));
  const auto x = std::make_shared<const Operator>(to_operator(sal1_central(n, i, j), *central, n));
  // The Casimir is shared by several checks; build it once up front.
  const auto k = std::make_shared<const Operator>(casimir_cubic(*c, g.B(i), g.A(i, j), g.C(i, j), *central));
  const std::vector<int> idx{i, j};

  std::vector<RelationTask> tasks;
  auto add = [&](std::string name, std::function<Operator()> fn) {
    tasks.push_back({std::move(name), idx, std::move(fn), false, {}});
  };
  add("Qij [B_i,A_ij] - C_ij", [G, i, j] { return commutator(G->B(i), G->A(i, j)) - G->C(i, j); });
  add("Qij [B_i,C_ij]", [G, i, j, x] {
    const Operator& bi = G->B(i);
    return commutator(bi, G->C(i, j)) -
           (ParamPoly(8) * (bi * bi) - ParamPoly(8) * (*x * bi) + ParamPoly(32) * ParamPoly::b() * G->A(i, j));
  });
  add("Qij [A_ij,C_ij]", [G, i, j, x, n] {
    const Operator& bi = G->B(i);
    const Operator& aij = G->A(i, j);
    Operator shifted = aij + Operator::scalar(n, make_rational(1, 2) * p8(i));
    return commutator(aij, G->C(i, j)) -
           (ParamPoly(-8) * acomm(bi, aij) + ParamPoly(8) * (*x * shifted) -
            ParamPoly(8) * (ParamPoly(4) * ParamPoly::a(i) + ParamPoly(4) * ParamPoly::a(j) - ParamPoly(3)) * bi);
  });
  add("Qij [B_i,C_ij] general form", [G, i, j, c, central] {
    return commutator(G->B(i), G->C(i, j)) - general_eg(*c, G->B(i), G->A(i, j), *central);
  });
  add("Qij [A_ij,C_ij] general form", [G, i, j, c, central] {
    return commutator(G->A(i, j), G->C(i, j)) - general_fg(*c, G->B(i), G->A(i, j), *central);
  });
  add("Qij casimir - quoted K_ij", [G, i, j, k] { return *k - sal1_casimir_quoted(*G, i, j); });
  add("Qij casimir - central K'_ij", [i, j, k, central, n] {
    return *k - to_operator(sal1_casimir_central(n, i, j), *central, n);
  });
  add("Qij [K_ij,B_i]", [G, i, k] { return commutator(*k, G->B(i)); });
  add("Qij [K_ij,A_ij]", [G, i, j, k] { return commutator(*k, G->A(i, j)); });
  add("Qij [K_ij,C_ij]", [G, i, j, k] { return commutator(*k, G->C(i, j)); });
  return run_tasks(tasks);
}

std::vector<RelationCheck> verify_racah_chain(const GeneratorSet& g, int i) {
  const int n = g.dim();
  if (i < 2 || i > n - 1) throw std::invalid_argument("chain index must satisfy 2 <= i <= N-1");
  const auto central = std::make_shared<const std::map<Var, Operator>>(central_operators(g));
  const auto c = std::make_shared<const QuadAlgConstants>(zal2_constants(n, i));
  const Operator& e = g.Zl(i - 1);
  const Operator& f = g.Yp(i);
  const auto gen = std::make_shared<const Operator>(commutator(e, f));
  const auto k = std::make_shared<const Operator>(casimir_cubic(*c, e, f, *gen, *central));
  const Operator* E = &e;
  const Operator* F = &f;

  // Central operators with the conventions Y_N = 0, Z_0 = 0.
  const auto y1 = std::make_shared<const Operator>(g.Yp(1));
  const auto yn = std::make_shared<const Operator>(g.Yp(i + 1));
  const auto zm = std::make_shared<const Operator>(g.Zl(i - 2));
  ParamPoly sum_lo, sum_all_i, sum_hi_i, sum_hi;
  for (int q = 1; q <= i - 1; ++q) sum_lo += ParamPoly::a(q);
  sum_all_i = sum_lo + ParamPoly::a(i);
  for (int q = i + 1; q <= n; ++q) sum_hi += ParamPoly::a(q);
  sum_hi_i = sum_hi + ParamPoly::a(i);
  const ParamPoly lo = ParamPoly(8) * sum_lo - ParamPoly(3 * (i - 1));
  const ParamPoly upto = ParamPoly(8) * sum_all_i - ParamPoly(3 * i);
  const ParamPoly from = ParamPoly(8) * sum_hi_i - ParamPoly(3 * (n - i + 1));
  const ParamPoly above = ParamPoly(8) * sum_hi - ParamPoly(3 * (n - i));
  const ParamPoly shift = make_rational(3, 2) - ParamPoly(4) * ParamPoly::a(i);

  std::vector<RelationTask> tasks;
  const std::vector<int> idx{i};
  auto add = [&](std::string name, std::function<Operator()> fn) {
    tasks.push_back({std::move(name), idx, std::move(fn), false, {}});
  };
  add("chain [H,C_i]", [G = &g, gen] { return commutator(G->H(), *gen); });
  add("chain [Z_{i-1},C_i]", [=] {
    const Operator bracket = *y1 + *yn + *zm + Operator::scalar(n, shift);
    Operator rhs = ParamPoly(8) * (*E * *E) + ParamPoly(8) * acomm(*E, *F) - ParamPoly(8) * (bracket * *E);
    rhs += ParamPoly(4) * upto * *F - ParamPoly(4) * p8(i) * *y1 - ParamPoly(4) * lo * *yn;
    rhs += ParamPoly(8) * ((*y1 - *yn) * *zm);
    return commutator(*E, *gen) - rhs;
  });
  add("chain [Y_i,C_i]", [=] {
    const Operator bracket = *y1 + *yn + *zm + Operator::scalar(n, shift);
    Operator rhs = ParamPoly(-8) * (*F * *F) - ParamPoly(8) * acomm(*E, *F) - ParamPoly(4) * from * *E;
    rhs += ParamPoly(8) * (bracket * *F) + ParamPoly(4) * p8(i) * *y1;
    rhs += ParamPoly(4) * above * *zm - ParamPoly(8) * (*y1 * *yn) + ParamPoly(8) * (*yn * *zm);
    return commutator(*F, *gen) - rhs;
  });
  add("chain [Z_{i-1},C_i] general form", [=] { return commutator(*E, *gen) - general_eg(*c, *E, *F, *central); });
  add("chain [Y_i,C_i] general form", [=] { return commutator(*F, *gen) - general_fg(*c, *E, *F, *central); });
  add("chain casimir - central K'_i", [=] { return *k - to_operator(zal2_casimir_central(n, i), *central, n); });
  add("chain [K_i,Z_{i-1}]", [=] { return commutator(*k, *E); });
  add("chain [K_i,Y_i]", [=] { return commutator(*k, *F); });
  add("chain [K_i,C_i]", [=] { return commutator(*k, *gen); });
  return run_tasks(tasks);
}

std::vector<RelationCheck> verify_yb_substructure(const GeneratorSet& g) {
  const int n = g.dim();
  const auto central = std::make_shared<const std::map<Var, Operator>>(central_operators(g));
  const auto c = std::make_shared<const QuadAlgConstants>(yal1_constants(n));
  const Operator* E = &g.Yp(1);
  const Operator* F = &g.B(n);
  const Operator* H = &g.H();
  const Operator* zm = &g.Zl(n - 2);
  const auto gen = std::make_shared<const Operator>(commutator(*E, *F));
  const auto k = std::make_shared<const Operator>(casimir_cubic(*c, *E, *F, *gen, *central));
  ParamPoly sum_all;
  for (int q = 1; q <= n; ++q) sum_all += ParamPoly::a(q);
  const ParamPoly total = ParamPoly(8) * sum_all - ParamPoly(3 * n);
  const ParamPoly b = ParamPoly::b();

  std::vector<RelationTask> tasks;
  auto add = [&](std::string name, std::function<Operator()> fn) {
    tasks.push_back({std::move(name), {n}, std::move(fn), false, {}});
  };
  add("YB [H,D]", [=] { return commutator(*H, *gen); });
  add("YB [Y_1,D]", [=] {
    Operator rhs = ParamPoly(8) * acomm(*E, *F) - ParamPoly(16) * (*H * *E) + ParamPoly(4) * total * *F +
                   ParamPoly(16) * (*H * *zm) - ParamPoly(8) * p8(n) * *H;
    return commutator(*E, *gen) - rhs;
  });
  add("YB [B_N,D]", [=] {
    Operator rhs = ParamPoly(-8) * (*F * *F) - ParamPoly(32) * b * *E + ParamPoly(16) * (*H * *F) +
                   ParamPoly(32) * b * *zm;
    return commutator(*F, *gen) - rhs;
  });
  add("YB [Y_1,D] general form", [=] { return commutator(*E, *gen) - general_eg(*c, *E, *F, *central); });
  add("YB [B_N,D] general form", [=] { return commutator(*F, *gen) - general_fg(*c, *E, *F, *central); });
  add("YB casimir - central K'", [=] { return *k - to_operator(yal1_casimir_central(n), *central, n); });
  add("YB [K,Y_1]", [=] { return commutator(*k, *E); });
  add("YB [K,B_N]", [=] { return commutator(*k, *F); });
  add("YB [K,D]", [=] { return commutator(*k, *gen); });
  return run_tasks(tasks);
}

std::vector<RelationCheck> verify_racah_suite(const GeneratorSet& g) {
  const int n = g.dim();
  std::vector<RelationTask> tasks;
  for (int l = 1; l <= n - 1; ++l)
    tasks.push_back({"[H,Z_l]", {l}, [G = &g, l] { return commutator(G->H(), G->Zl(l)); }, false, {}});
  for (int p = 1; p <= n - 1; ++p)
    tasks.push_back({"[H,Y_p]", {p}, [G = &g, p] { return commutator(G->H(), G->Yp(p)); }, false, {}});
  // Z_l and Y_{l+2} act on disjoint coordinates.
  for (int l = 1; l + 2 <= n - 1; ++l)
    tasks.push_back({"[Z_l,Y_{l+2}]", {l}, [G = &g, l] { return commutator(G->Zl(l), G->Yp(l + 2)); }, false, {}});
  auto out = run_tasks(tasks);
  for (int i = 2; i <= n - 1; ++i) {
    auto part = verify_racah_chain(g, i);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  auto yb = verify_yb_substructure(g);
  out.insert(out.end(), std::make_move_iterator(yb.begin()), std::make_move_iterator(yb.end()));
  return out;
}

std::vector<RelationCheck> verify_su11(const GeneratorSet& g) {
  const int n = g.dim();
  const GeneratorSet* G = &g;
  const ParamPoly s = ParamPoly::s();
  std::vector<RelationTask> tasks;
  tasks.push_back({"[D+,H] + 2s D+", {}, [G, s] {
                     return commutator(G->Dplus(), G->H()) + ParamPoly(2) * s * G->Dplus();
                   }, false, {}});
  tasks.push_back({"[D-,H] - 2s D-", {}, [G, s] {
                     return commutator(G->Dminus(), G->H()) - ParamPoly(2) * s * G->Dminus();
                   }, false, {}});
  tasks.push_back({"[D-,D+] - 4s H", {}, [G, s] {
                     return commutator(G->Dminus(), G->Dplus()) - ParamPoly(4) * s * G->H();
                   }, false, {}});
  tasks.push_back({"Z - sum A_ij", {}, [G, n] {
                     Operator z = G->Z();
                     for (int i = 1; i <= n; ++i)
                       for (int j = i + 1; j <= n; ++j) z -= G->A(i, j);
                     return z;
                   }, false, {}});
  tasks.push_back({"Z - angular form", {}, [G, n] {
                     Operator rhs(n);
                     for (int i = 1; i <= n; ++i)
                       for (int j = i + 1; j <= n; ++j) rhs -= G->J(i, j) * G->J(i, j);
                     Operator pot(n);
                     for (int i = 1; i <= n; ++i) pot += ParamPoly::a(i) * Operator::x(n, i, -2);
                     rhs += ParamPoly(2) * (G->r2() * pot);
                     ParamPoly c = make_rational(n * (n - 1), 4);
                     for (int i = 1; i <= n; ++i) c -= ParamPoly(2) * ParamPoly::a(i);
                     rhs += Operator::scalar(n, c);
                     return G->Z() - rhs;
                   }, false, {}});
  return run_tasks(tasks);
}

std::vector<RelationCheck> verify_substitution_regression(const GeneratorSet& g, int count, std::uint32_t seed) {
  const int n = g.dim();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7), spos(1, 5);
  std::vector<RelationTask> tasks;
  for (int trial = 0; trial < count; ++trial) {
    auto values = std::make_shared<std::map<Var, Rational>>();
    (*values)[Var::s()] = make_rational(spos(rng), den(rng));
    for (int i = 1; i <= n; ++i) (*values)[Var::a(i)] = make_rational(num(rng), den(rng));
    const Rational s = values->at(Var::s());
    const Rational b = s * s / 2;
    std::string note = "s=" + to_string(s);
    for (int i = 1; i <= n; ++i) note += " a" + std::to_string(i) + "=" + to_string(values->at(Var::a(i)));

    // Substitute first, then multiply: exercises the homomorphism property
    // against the symbolic results.
    tasks.push_back({"substituted [B_1,C_12]", {trial + 1}, [G = &g, values, b] {
                       const Operator b1 = G->B(1).substitute_params(*values);
                       const Operator b2 = G->B(2).substitute_params(*values);
                       const Operator a12 = G->A(1, 2).substitute_params(*values);
                       const Operator c12 = commutator(b1, a12);
                       return commutator(b1, c12) - (ParamPoly(-4) * acomm(b1, b2) + ParamPoly(32 * b) * a12);
                     }, false, note});
    tasks.push_back({"substituted [H,A_12]", {trial + 1}, [G = &g, values] {
                       return commutator(G->H().substitute_params(*values), G->A(1, 2).substitute_params(*values));
                     }, false, note});
    tasks.push_back({"substituted C_12 - symbolic C_12", {trial + 1}, [G = &g, values] {
                       const Operator c = commutator(G->B(1).substitute_params(*values),
                                                     G->A(1, 2).substitute_params(*values));
                       return c - G->C(1, 2).substitute_params(*values);
                     }, false, note});
    if (n >= 3)
      tasks.push_back({"substituted [A_23,D_123]", {trial + 1}, [G = &g, values] {
                         const Operator a12 = G->A(1, 2).substitute_params(*values);
                         const Operator a13 = G->A(1, 3).substitute_params(*values);
                         const Operator a23 = G->A(2, 3).substitute_params(*values);
                         const Operator d = commutator(a12, a23);
                         const Rational c2 = 4 * (8 * values->at(Var::a(2)) - 3);
                         const Rational c3 = 4 * (8 * values->at(Var::a(3)) - 3);
                         return commutator(a23, d) - (kFour * acomm(a13, a23) - kFour * acomm(a23, a12) +
                                                      ParamPoly(c2) * a13 - ParamPoly(c3) * a12);
                       }, false, note});
  }
  return run_tasks(tasks);
}

}  // namespace swalg
