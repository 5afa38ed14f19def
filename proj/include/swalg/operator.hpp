#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "swalg/param_poly.hpp"

namespace swalg {

// x_1^{c_1}..x_N^{c_N} d_1^{k_1}..d_N^{k_N} with all coordinate factors to the
// left of all derivatives. Coordinate exponents may be negative.
struct OpMonomial {
  std::array<std::int8_t, kMaxDim> coord{};
  std::array<std::int8_t, kMaxDim> deriv{};

  int derivative_order() const;
  int coordinate_degree() const;

  friend bool operator==(const OpMonomial&, const OpMonomial&) = default;
};

// Graded lexicographic order: total (coordinate + derivative) degree, then the
// coordinate exponents, then the derivative orders.
struct GradedLex {
  bool operator()(const OpMonomial& l, const OpMonomial& r) const;
};

// Normal-ordered differential operator in N coordinates with ParamPoly
// coefficients. Values are immutable in practice: every arithmetic operation
// returns a fresh operator in canonical form, so equality is term-map equality.
class Operator {
 public:
  using TermMap = std::map<OpMonomial, ParamPoly, GradedLex>;

  Operator() = default;
  explicit Operator(int dim);

  static Operator zero(int dim) { return Operator(dim); }
  static Operator scalar(int dim, const ParamPoly& c);
  static Operator identity(int dim) { return scalar(dim, ParamPoly(1)); }
  // x_i^e, 1-based i
  static Operator x(int dim, int i, int e = 1);
  // d_i^k, 1-based i
  static Operator d(int dim, int i, int k = 1);
  static Operator monomial(int dim, const OpMonomial& m, const ParamPoly& c);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Number of (operator monomial, parameter monomial) pairs.
  std::size_t flat_size() const;
  int derivative_order() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const ParamPoly& c);

  friend Operator operator+(Operator l, const Operator& r) { return l += r; }
  friend Operator operator-(Operator l, const Operator& r) { return l -= r; }
  friend Operator operator-(Operator o);
  friend Operator operator*(const Operator& l, const Operator& r);
  friend Operator operator*(const ParamPoly& c, Operator o) { return o *= c; }
  friend Operator operator*(Operator o, const ParamPoly& c) { return o *= c; }
  friend bool operator==(const Operator& l, const Operator& r) {
    return l.dim_ == r.dim_ && l.terms_ == r.terms_;
  }

  Operator pow(int e) const;

  // Replaces every indeterminate by a rational value. Throws
  // std::invalid_argument when any variable occurring in a coefficient is not
  // assigned.
  Operator substitute_params(const std::map<Var, Rational>& values) const;

  // One term per line: "coeff | x-exponents | d-orders", in canonical order.
  std::string serialize() const;
  static Operator parse(std::string_view text, int dim);

 private:
  void add_term(const OpMonomial& m, const ParamPoly& c);

  int dim_ = 0;
  TermMap terms_;
};

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

}  // namespace swalg
