#include "swalg/param_poly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace swalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t.front() == '+') t.erase(0, 1);
  Rational r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

long double to_long_double(const Rational& r) {
  // mpq -> double loses bits for long double; go through the exact quotient
  // of big integers split into high/low parts.
  mpf_class num(r.get_num(), 128), den(r.get_den(), 128);
  mpf_class q(0, 128);
  q = num / den;
  const double hi = q.get_d();
  mpf_class rem(0, 128);
  rem = q - mpf_class(hi, 128);
  return static_cast<long double>(hi) + static_cast<long double>(rem.get_d());
}

// --- Var -------------------------------------------------------------------

int Var::slot() const {
  switch (kind) {
    case VarKind::S: return 0;
    case VarKind::A:
      if (index < 1 || index > kMaxDim) break;
      return index;
    case VarKind::H: return 9;
    case VarKind::Beta:
      if (index < 1 || index > kMaxDim) break;
      return 9 + index;
    case VarKind::Y:
      if (index < 1 || index > 8) break;
      return 17 + index;
    case VarKind::Z:
      if (index < 1 || index > 6) break;
      return 25 + index;
  }
  throw std::out_of_range("variable index out of range: " + std::to_string(index));
}

Var Var::from_slot(int slot) {
  if (slot == 0) return s();
  if (slot <= 8) return a(slot);
  if (slot == 9) return h();
  if (slot <= 17) return beta(slot - 9);
  if (slot <= 25) return y(slot - 17);
  if (slot <= 31) return z(slot - 25);
  throw std::out_of_range("bad variable slot");
}

std::string Var::name() const {
  switch (kind) {
    case VarKind::S: return "s";
    case VarKind::A: return "a" + std::to_string(index);
    case VarKind::H: return "h";
    case VarKind::Beta: return "beta" + std::to_string(index);
    case VarKind::Y: return "Y" + std::to_string(index);
    case VarKind::Z: return "Z" + std::to_string(index);
  }
  return "?";
}

std::optional<Var> Var::from_name(std::string_view name) {
  auto indexed = [&](std::string_view prefix, VarKind kind) -> std::optional<Var> {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    int idx = 0;
    for (char c : name.substr(prefix.size())) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      idx = idx * 10 + (c - '0');
    }
    Var v{kind, idx};
    try {
      (void)v.slot();
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
    return v;
  };
  if (name == "s") return s();
  if (name == "h") return h();
  if (auto v = indexed("beta", VarKind::Beta)) return v;
  if (auto v = indexed("a", VarKind::A)) return v;
  if (auto v = indexed("Y", VarKind::Y)) return v;
  if (auto v = indexed("Z", VarKind::Z)) return v;
  return std::nullopt;
}

// --- Monomial --------------------------------------------------------------

Monomial Monomial::of(Var v, int e) {
  if (e < 0 || e > 255) throw std::out_of_range("monomial exponent out of range");
  Monomial m;
  m.exps_[v.slot()] = static_cast<std::uint8_t>(e);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kVarSlots; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

bool operator<(const Monomial& l, const Monomial& r) {
  int dl = l.degree(), dr = r.degree();
  if (dl != dr) return dl < dr;
  return l.exps_ > r.exps_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kVarSlots; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += Var::from_slot(i).name();
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

// --- ParamPoly -------------------------------------------------------------

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::var(Var v, int e) {
  ParamPoly p;
  p.terms_.emplace(Monomial::of(v, e), Rational(1));
  return p;
}

ParamPoly ParamPoly::b() {
  ParamPoly p;
  p.terms_.emplace(Monomial::of(Var::s(), 2), make_rational(1, 2));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

bool ParamPoly::depends_on(VarKind kind) const {
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kVarSlots; ++i)
      if (m.exponent_at(i) != 0 && Var::from_slot(i).kind == kind) return true;
  return false;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ParamPoly operator*(const ParamPoly& l, const ParamPoly& r) {
  ParamPoly out;
  if (l.is_zero() || r.is_zero()) return out;
  for (const auto& [ml, cl] : l.terms_)
    for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
  return out;
}

ParamPoly operator-(ParamPoly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

ParamPoly ParamPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of polynomial");
  ParamPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::substitute(const std::map<Var, ParamPoly>& values) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamPoly term(c);
    Monomial kept;
    for (int i = 0; i < kVarSlots; ++i) {
      int e = m.exponent_at(i);
      if (e == 0) continue;
      Var v = Var::from_slot(i);
      auto it = values.find(v);
      if (it == values.end())
        kept = kept * Monomial::of(v, e);
      else
        term *= it->second.pow(e);
    }
    ParamPoly k;
    k.terms_.emplace(kept, Rational(1));
    out += term * k;
  }
  return out;
}

namespace {

template <class T>
T eval_impl(const ParamPoly::TermMap& terms, const std::map<Var, T>& values,
            const std::function<T(const Rational&)>& conv) {
  T total = conv(Rational(0));
  for (const auto& [m, c] : terms) {
    T term = conv(c);
    for (int i = 0; i < kVarSlots; ++i) {
      int e = m.exponent_at(i);
      if (e == 0) continue;
      Var v = Var::from_slot(i);
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + v.name());
      T p = conv(Rational(1));
      for (int k = 0; k < e; ++k) p *= it->second;
      term *= p;
    }
    total += term;
  }
  return total;
}

}  // namespace

Rational ParamPoly::evaluate(const std::map<Var, Rational>& values) const {
  return eval_impl<Rational>(terms_, values, [](const Rational& r) { return r; });
}

long double ParamPoly::evaluate(const std::map<Var, long double>& values) const {
  return eval_impl<long double>(terms_, values, [](const Rational& r) { return to_long_double(r); });
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += swalg::to_string(mag);
    } else {
      if (mag != 1) out += swalg::to_string(mag) + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ParamPoly parse error at " + std::to_string(pos) + ": " + what);
  }

  // factor := rational | name ['^' int]
  void parse_factor(Rational& coeff, Monomial& mono) {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(src[pos]))) {
      std::size_t start = pos;
      while (pos < src.size() && (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '/')) ++pos;
      coeff *= parse_rational(src.substr(start, pos - start));
      return;
    }
    std::size_t start = pos;
    while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
    auto v = Var::from_name(src.substr(start, pos - start));
    if (!v) fail("unknown variable '" + std::string(src.substr(start, pos - start)) + "'");
    int e = 1;
    skip_ws();
    if (pos < src.size() && src[pos] == '^') {
      ++pos;
      std::size_t es = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      if (es == pos) fail("missing exponent");
      e = std::stoi(std::string(src.substr(es, pos - es)));
    }
    mono = mono * Monomial::of(*v, e);
  }

  ParamPoly parse() {
    ParamPoly out;
    skip_ws();
    if (src.substr(pos) == "0") return out;
    int sign = 1;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) {
      sign = src[pos] == '-' ? -1 : 1;
      ++pos;
    }
    for (;;) {
      Rational coeff(sign);
      Monomial mono;
      parse_factor(coeff, mono);
      skip_ws();
      while (pos < src.size() && src[pos] == '*') {
        ++pos;
        parse_factor(coeff, mono);
        skip_ws();
      }
      out.add_term(mono, coeff);
      if (pos >= src.size()) break;
      if (src[pos] != '+' && src[pos] != '-') fail("expected + or -");
      sign = src[pos] == '-' ? -1 : 1;
      ++pos;
    }
    return out;
  }
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) { return PolyParser{text}.parse(); }

}  // namespace swalg
