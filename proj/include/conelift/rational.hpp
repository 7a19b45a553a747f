// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>

#include "conelift/errors.hpp"

namespace conelift {

// All coefficient arithmetic is exact. Rationals are kept reduced with a
// positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with sign canonicalization (the backend rejects negative
// denominators in the two-argument constructor).
inline Rational make_rational(Int num, Int den) {
  if (den.is_zero()) throw InvalidFraction("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Rational rational_pow(const Rational& q, unsigned exponent) {
  using boost::multiprecision::pow;
  if (exponent == 0) return Rational(1);
  return Rational(pow(numerator(q), exponent), pow(denominator(q), exponent));
}

// Exact square root when numerator and denominator are perfect squares.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  using boost::multiprecision::sqrt;
  const Int n = numerator(q);
  const Int d = denominator(q);
  const Int rn = sqrt(n);
  const Int rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

// "p" for integers, "p/q" otherwise; parseable by the expression front-end.
inline std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace conelift
