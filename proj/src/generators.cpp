#include "swalg/generators.hpp"

#include <stdexcept>

namespace swalg {

namespace {

std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

template <class Map, class Key>
const Operator& lookup(const Map& m, const Key& k, const char* what) {
  auto it = m.find(k);
  if (it == m.end()) throw std::out_of_range(std::string("no generator ") + what + " for these indices");
  return it->second;
}

// Parses "B3" / "A12" style names into the index list.
std::optional<std::pair<char, std::vector<int>>> split_name(const std::string& name) {
  if (name.empty()) return std::nullopt;
  std::vector<int> idx;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (name[k] < '1' || name[k] > '9') return std::nullopt;
    idx.push_back(name[k] - '0');
  }
  return std::pair{name[0], idx};
}

}  // namespace

Operator hamiltonian(int n) {
  Operator h(n);
  for (int i = 1; i <= n; ++i) {
    h += make_rational(-1, 2) * Operator::d(n, i, 2);
    h += ParamPoly::b() * Operator::x(n, i, 2);
    h += ParamPoly::a(i) * Operator::x(n, i, -2);
  }
  return h;
}

Operator b_integral(int n, int i) {
  // B_i = -d_i^2 + 2b x_i^2 + 2 a_i / x_i^2
  return -Operator::d(n, i, 2) + ParamPoly(2) * ParamPoly::b() * Operator::x(n, i, 2) +
         ParamPoly(2) * ParamPoly::a(i) * Operator::x(n, i, -2);
}

Operator angular_momentum(int n, int i, int j) {
  return Operator::x(n, i) * Operator::d(n, j) - Operator::x(n, j) * Operator::d(n, i);
}

Operator a_integral(int n, int i, int j) {
  // A_ij = -J_ij^2 + 2 a_i x_j^2 / x_i^2 + 2 a_j x_i^2 / x_j^2 + 1/2
  Operator jij = angular_momentum(n, i, j);
  return -(jij * jij) + ParamPoly(2) * ParamPoly::a(i) * (Operator::x(n, j, 2) * Operator::x(n, i, -2)) +
         ParamPoly(2) * ParamPoly::a(j) * (Operator::x(n, i, 2) * Operator::x(n, j, -2)) +
         Operator::scalar(n, make_rational(1, 2));
}

const Operator& GeneratorSet::B(int i) const { return lookup(b_, i, "B"); }
const Operator& GeneratorSet::A(int i, int j) const { return lookup(a_, ordered(i, j), "A"); }
const Operator& GeneratorSet::J(int i, int j) const { return lookup(j_, std::pair{i, j}, "J"); }
const Operator& GeneratorSet::C(int i, int j) const { return lookup(c_, std::pair{i, j}, "C"); }
const Operator& GeneratorSet::D(int i, int j, int k) const { return lookup(d_, std::tuple{i, j, k}, "D"); }
const Operator& GeneratorSet::Zl(int l) const { return lookup(z_, l, "Z"); }
const Operator& GeneratorSet::Yp(int p) const { return lookup(y_, p, "Y"); }

std::optional<Operator> GeneratorSet::named(const std::string& name) const {
  if (name == "H") return h_;
  auto parts = split_name(name);
  if (!parts) return std::nullopt;
  const auto& [kind, idx] = *parts;
  try {
    if (kind == 'B' && idx.size() == 1) return B(idx[0]);
    if (kind == 'A' && idx.size() == 2 && idx[0] != idx[1]) return A(idx[0], idx[1]);
    if (kind == 'C' && idx.size() == 2 && idx[0] != idx[1]) return C(idx[0], idx[1]);
    if (kind == 'D' && idx.size() == 3) return D(idx[0], idx[1], idx[2]);
  } catch (const std::out_of_range&) {
  }
  return std::nullopt;
}

GeneratorSet build_generators(int n, const std::optional<FaultInjection>& fault) {
  if (n < 2) throw std::invalid_argument("generator set needs N >= 2");
  if (n > kMaxDim) throw std::invalid_argument("generator set supports N <= " + std::to_string(kMaxDim));

  GeneratorSet g;
  g.dim_ = n;
  g.h_ = hamiltonian(n);
  for (int i = 1; i <= n; ++i) g.b_.emplace(i, b_integral(n, i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) g.j_.emplace(std::pair{i, j}, angular_momentum(n, i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.a_.emplace(std::pair{i, j}, a_integral(n, i, j));

  if (fault) {
    auto parts = split_name(fault->target);
    bool applied = false;
    if (fault->target == "H") {
      g.h_ += Operator::x(n, 1, 2);
      applied = true;
    } else if (parts && parts->first == 'B' && parts->second.size() == 1 && g.b_.count(parts->second[0])) {
      int i = parts->second[0];
      g.b_.at(i) += Operator::x(n, i, 2);
      applied = true;
    } else if (parts && parts->first == 'A' && parts->second.size() == 2) {
      auto key = ordered(parts->second[0], parts->second[1]);
      if (g.a_.count(key)) {
        g.a_.at(key) += Operator::x(n, key.first) * Operator::x(n, key.second);
        applied = true;
      }
    }
    if (!applied) throw std::invalid_argument("cannot inject fault into '" + fault->target + "'");
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) g.c_.emplace(std::pair{i, j}, commutator(g.B(i), g.A(i, j)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (i != j && j != k && i != k) g.d_.emplace(std::tuple{i, j, k}, commutator(g.A(i, j), g.A(j, k)));

  for (int l = 0; l <= n - 1; ++l) {
    Operator z(n);
    for (int i = 1; i <= l + 1; ++i)
      for (int k = i + 1; k <= l + 1; ++k) z += g.A(i, k);
    g.z_.emplace(l, std::move(z));
  }
  for (int p = 1; p <= n + 1; ++p) {
    Operator y(n);
    for (int i = p; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) y += g.A(i, k);
    g.y_.emplace(p, std::move(y));
  }

  g.euler_ = Operator(n);
  g.r2_ = Operator(n);
  for (int i = 1; i <= n; ++i) {
    g.euler_ += Operator::x(n, i) * Operator::d(n, i);
    g.r2_ += Operator::x(n, i, 2);
  }
  // D^{+/-} = H +/- sqrt(2b) r d_r - 2b r^2 +/- sqrt(b/2) N, with r d_r the
  // Euler operator, sqrt(2b) = s and sqrt(b/2) = s/2.
  const ParamPoly s = ParamPoly::s();
  const Operator shift = Operator::scalar(n, s * make_rational(n, 2));
  const Operator radial = s * g.euler_;
  const Operator quad = ParamPoly(2) * ParamPoly::b() * g.r2_;
  g.dplus_ = g.h_ + radial - quad + shift;
  g.dminus_ = g.h_ - radial - quad - shift;
  return g;
}

}  // namespace swalg
