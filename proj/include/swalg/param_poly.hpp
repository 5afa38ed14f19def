#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace swalg {

// Exact rationals. gmpxx keeps results of arithmetic in lowest terms with a
// positive denominator; values built from strings go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
long double to_long_double(const Rational& r);

// Largest dimension supported by the symbolic layer.
inline constexpr int kMaxDim = 8;

// Indeterminates of the coefficient ring.
//
// Model parameters are s (with b = s^2/2) and a_1..a_N. The remaining kinds are
// symbols for central elements that quadratic-algebra structure constants are
// written in: h for H, beta_k for B_k, Y_p and Z_l for the Racah-chain sums.
enum class VarKind : std::uint8_t { S, A, H, Beta, Y, Z };

struct Var {
  VarKind kind = VarKind::S;
  int index = 0;

  static Var s() { return {VarKind::S, 0}; }
  static Var a(int i) { return {VarKind::A, i}; }
  static Var h() { return {VarKind::H, 0}; }
  static Var beta(int k) { return {VarKind::Beta, k}; }
  static Var y(int p) { return {VarKind::Y, p}; }
  static Var z(int l) { return {VarKind::Z, l}; }

  int slot() const;
  static Var from_slot(int slot);
  std::string name() const;
  static std::optional<Var> from_name(std::string_view name);

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var& l, const Var& r) { return l.slot() <=> r.slot(); }
};

inline constexpr int kVarSlots = 32;

// Exponent vector over all variable slots.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial of(Var v, int e = 1);

  int exponent(Var v) const { return exps_[v.slot()]; }
  int exponent_at(int slot) const { return exps_[slot]; }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;

  // Graded lexicographic: total degree first, then slot-wise lexicographic.
  friend bool operator<(const Monomial& l, const Monomial& r);
  friend bool operator==(const Monomial& l, const Monomial& r) { return l.exps_ == r.exps_; }

  std::string to_string() const;

 private:
  std::array<std::uint8_t, kVarSlots> exps_;
};

// Multivariate polynomial with rational coefficients over the Var universe.
// Zero coefficients are never stored.
class ParamPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: constants convert implicitly
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT
  ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT

  static ParamPoly var(Var v, int e = 1);
  static ParamPoly s() { return var(Var::s()); }
  static ParamPoly a(int i) { return var(Var::a(i)); }
  // b = s^2 / 2
  static ParamPoly b();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  int degree_in(Var v) const;
  bool depends_on(VarKind kind) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

  friend ParamPoly operator+(ParamPoly l, const ParamPoly& r) { return l += r; }
  friend ParamPoly operator-(ParamPoly l, const ParamPoly& r) { return l -= r; }
  friend ParamPoly operator*(const ParamPoly& l, const ParamPoly& r);
  friend ParamPoly operator-(ParamPoly p);
  friend bool operator==(const ParamPoly& l, const ParamPoly& r) { return l.terms_ == r.terms_; }

  ParamPoly pow(int e) const;

  // Replaces each listed variable by a polynomial; unlisted variables stay.
  ParamPoly substitute(const std::map<Var, ParamPoly>& values) const;

  // Full evaluation. Throws std::invalid_argument when a variable that occurs
  // in the polynomial has no value.
  Rational evaluate(const std::map<Var, Rational>& values) const;
  long double evaluate(const std::map<Var, long double>& values) const;

  // Deterministic text form, e.g. "-1/2*s^2*a1 + 3"; parse() inverts it.
  std::string to_string() const;
  static ParamPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

}  // namespace swalg
