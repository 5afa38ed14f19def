#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>

#include "swalg/param_poly.hpp"

namespace swalg {

// Scalar helpers shared by the float (long double) and exact (Rational) paths.

inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

template <class T>
T scalar_sqrt(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    auto r = exact_sqrt(v);
    if (!r) throw std::domain_error("square root of " + to_string(v) + " is not rational");
    return *r;
  } else {
    if (v < 0) throw std::domain_error("square root of a negative number");
    return std::sqrt(v);
  }
}

template <class T>
T scalar_abs(const T& v) {
  return v < 0 ? T(-v) : v;
}

template <class T>
long double as_long_double(const T& v) {
  if constexpr (std::is_same_v<T, Rational>)
    return to_long_double(v);
  else
    return static_cast<long double>(v);
}

template <class T>
T from_int(long v) {
  return T(v);
}

template <class T>
T half() {
  if constexpr (std::is_same_v<T, Rational>)
    return make_rational(1, 2);
  else
    return T(0.5L);
}

template <class T>
T ratio(long num, long den) {
  if constexpr (std::is_same_v<T, Rational>)
    return make_rational(num, den);
  else
    return static_cast<T>(num) / static_cast<T>(den);
}

// |x - y| <= rel * max(|x|, |y|), with an absolute floor for values near 0.
template <class T>
bool close_rel(const T& x, const T& y, long double rel) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (x == y) return true;
  }
  long double a = as_long_double(x), b = as_long_double(y);
  long double scale = std::max({std::fabs(a), std::fabs(b), 1e-300L});
  return std::fabs(a - b) <= rel * scale;
}

}  // namespace swalg
