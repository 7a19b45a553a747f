// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>

#include "conelift/polynomial_gcd.hpp"

namespace conelift {

// Quotient of polynomials in lowest terms with monic denominator. The zero
// function is 0/1. Construction with a zero denominator throws
// InvalidFraction.
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial numerator)
      : num_(std::move(numerator)), den_(Polynomial::one(num_.vars(), num_.order())) {}

  RationalFunction(Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.vars() != den_.vars())
      throw VarSetMismatch("numerator and denominator over different variable sets");
    if (den_.is_zero()) throw InvalidFraction("zero denominator");
    reduce();
  }

  static RationalFunction zero(VarSet vars, MonomialOrder order = MonomialOrder::Grevlex) {
    return RationalFunction(Polynomial::zero(std::move(vars), order));
  }

  static RationalFunction one(VarSet vars, MonomialOrder order = MonomialOrder::Grevlex) {
    return RationalFunction(Polynomial::one(std::move(vars), order));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InvalidFraction("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial::one(num_.vars(), num_.order());
      return;
    }
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
      const Rational inv = Rational(Rational(1) / lc);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

}  // namespace conelift
