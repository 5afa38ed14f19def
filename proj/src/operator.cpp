#include "swalg/operator.hpp"

#include <sstream>
#include <stdexcept>

namespace swalg {

namespace {

std::int8_t narrow_exp(int e) {
  if (e < -127 || e > 127) throw std::overflow_error("operator exponent out of range");
  return static_cast<std::int8_t>(e);
}

void check_index(int dim, int i) {
  if (i < 1 || i > dim) throw std::out_of_range("coordinate index out of range");
}

// d^k x^e = sum_j C(k,j) e(e-1)..(e-j+1) x^{e-j} d^{k-j}
struct Reorder {
  int j;
  mpz_class coeff;
};

std::vector<Reorder> reorder_terms(int k, int e) {
  std::vector<Reorder> out;
  mpz_class binom = 1, falling = 1;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      binom = binom * (k - j + 1) / j;
      falling *= (e - j + 1);
    }
    if (falling == 0) break;
    out.push_back({j, binom * falling});
  }
  return out;
}

}  // namespace

int OpMonomial::derivative_order() const {
  int d = 0;
  for (auto k : deriv) d += k;
  return d;
}

int OpMonomial::coordinate_degree() const {
  int d = 0;
  for (auto c : coord) d += c;
  return d;
}

bool GradedLex::operator()(const OpMonomial& l, const OpMonomial& r) const {
  int gl = l.coordinate_degree() + l.derivative_order();
  int gr = r.coordinate_degree() + r.derivative_order();
  if (gl != gr) return gl < gr;
  if (l.coord != r.coord) return l.coord > r.coord;
  return l.deriv > r.deriv;
}

Operator::Operator(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw std::out_of_range("operator dimension out of range");
}

Operator Operator::scalar(int dim, const ParamPoly& c) {
  Operator o(dim);
  o.add_term(OpMonomial{}, c);
  return o;
}

Operator Operator::x(int dim, int i, int e) {
  check_index(dim, i);
  OpMonomial m;
  m.coord[i - 1] = narrow_exp(e);
  return monomial(dim, m, ParamPoly(1));
}

Operator Operator::d(int dim, int i, int k) {
  check_index(dim, i);
  if (k < 0) throw std::invalid_argument("negative derivative order");
  OpMonomial m;
  m.deriv[i - 1] = narrow_exp(k);
  return monomial(dim, m, ParamPoly(1));
}

Operator Operator::monomial(int dim, const OpMonomial& m, const ParamPoly& c) {
  Operator o(dim);
  for (int i = dim; i < kMaxDim; ++i)
    if (m.coord[i] != 0 || m.deriv[i] != 0) throw std::invalid_argument("monomial exceeds dimension");
  o.add_term(m, c);
  return o;
}

std::size_t Operator::flat_size() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n += c.size();
  return n;
}

int Operator::derivative_order() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.derivative_order());
  return d;
}

void Operator::add_term(const OpMonomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Operator& Operator::operator+=(const Operator& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Operator& Operator::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

Operator operator-(Operator o) {
  for (auto& [m, c] : o.terms_) c = -c;
  return o;
}

Operator operator*(const Operator& l, const Operator& r) {
  if (l.dim_ != r.dim_) throw std::invalid_argument("dimension mismatch");
  const int n = l.dim_;
  Operator out(n);
  std::array<std::vector<Reorder>, kMaxDim> expansions;
  for (const auto& [ml, cl] : l.terms_) {
    for (const auto& [mr, cr] : r.terms_) {
      const ParamPoly coeff = cl * cr;
      if (coeff.is_zero()) continue;
      for (int i = 0; i < n; ++i) expansions[i] = reorder_terms(ml.deriv[i], mr.coord[i]);

      // Walk the cartesian product of per-coordinate reorderings.
      std::array<std::size_t, kMaxDim> pick{};
      for (;;) {
        OpMonomial m;
        mpz_class c = 1;
        for (int i = 0; i < n; ++i) {
          const Reorder& rr = expansions[i][pick[i]];
          m.coord[i] = narrow_exp(ml.coord[i] + mr.coord[i] - rr.j);
          m.deriv[i] = narrow_exp(ml.deriv[i] - rr.j + mr.deriv[i]);
          c *= rr.coeff;
        }
        ParamPoly term = coeff;
        term *= Rational(c);
        out.add_term(m, term);

        int i = 0;
        while (i < n) {
          if (++pick[i] < expansions[i].size()) break;
          pick[i] = 0;
          ++i;
        }
        if (i == n) break;
      }
    }
  }
  return out;
}

Operator Operator::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative operator power");
  Operator result = identity(dim_);
  for (int k = 0; k < e; ++k) result = result * *this;
  return result;
}

Operator Operator::substitute_params(const std::map<Var, Rational>& values) const {
  Operator out(dim_);
  for (const auto& [m, c] : terms_) out.add_term(m, ParamPoly(c.evaluate(values)));
  return out;
}

std::string Operator::serialize() const {
  std::ostringstream os;
  for (const auto& [m, c] : terms_) {
    os << c.to_string() << " |";
    for (int i = 0; i < dim_; ++i) os << ' ' << static_cast<int>(m.coord[i]);
    os << " |";
    for (int i = 0; i < dim_; ++i) os << ' ' << static_cast<int>(m.deriv[i]);
    os << '\n';
  }
  return os.str();
}

Operator Operator::parse(std::string_view text, int dim) {
  Operator out(dim);
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bar1 = line.find('|');
    auto bar2 = bar1 == std::string::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos)
      throw std::invalid_argument("operator line " + std::to_string(lineno) + ": expected 'coeff | x | d'");
    ParamPoly coeff = ParamPoly::parse(line.substr(0, bar1));
    auto read_vec = [&](const std::string& part, std::array<std::int8_t, kMaxDim>& dst, bool nonneg) {
      std::istringstream ps(part);
      int v = 0, count = 0;
      while (ps >> v) {
        if (count >= dim) throw std::invalid_argument("too many exponents on line " + std::to_string(lineno));
        if (nonneg && v < 0) throw std::invalid_argument("negative derivative order on line " + std::to_string(lineno));
        dst[count++] = narrow_exp(v);
      }
      if (!ps.eof() || count != dim)
        throw std::invalid_argument("expected " + std::to_string(dim) + " exponents on line " + std::to_string(lineno));
    };
    OpMonomial m;
    read_vec(line.substr(bar1 + 1, bar2 - bar1 - 1), m.coord, false);
    read_vec(line.substr(bar2 + 1), m.deriv, true);
    out.add_term(m, coeff);
  }
  return out;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

}  // namespace swalg
