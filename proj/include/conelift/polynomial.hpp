// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conelift/errors.hpp"
#include "conelift/monomial.hpp"
#include "conelift/rational.hpp"
#include "conelift/varset.hpp"

namespace conelift {

struct Term {
  ExponentVector monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Multivariate polynomial with exact rational coefficients, kept in canonical
// form: terms sorted descending under the active monomial order, no zero
// coefficients. Two equal polynomials over the same variable set and order
// have identical representations. Values are immutable after construction.
class Polynomial {
 public:
  static Polynomial zero(VarSet vars, MonomialOrder order = MonomialOrder::Grevlex) {
    return Polynomial(std::move(vars), order, {});
  }

  static Polynomial constant(VarSet vars, Rational value,
                             MonomialOrder order = MonomialOrder::Grevlex) {
    std::vector<Term> terms;
    if (!value.is_zero()) terms.push_back({ExponentVector::zero(vars.size()), std::move(value)});
    return Polynomial(std::move(vars), order, std::move(terms));
  }

  static Polynomial one(VarSet vars, MonomialOrder order = MonomialOrder::Grevlex) {
    return constant(std::move(vars), Rational(1), order);
  }

  static Polynomial variable(VarSet vars, std::size_t index,
                             MonomialOrder order = MonomialOrder::Grevlex) {
    if (index >= vars.size()) throw UnknownVariable("variable index out of range");
    const std::size_t n = vars.size();
    return Polynomial(std::move(vars), order,
                      {{ExponentVector::unit(n, index), Rational(1)}});
  }

  static Polynomial variable(VarSet vars, std::string_view name,
                             MonomialOrder order = MonomialOrder::Grevlex) {
    const auto idx = vars.index_of(name);
    if (!idx) throw UnknownVariable("unknown variable: " + std::string(name));
    return variable(std::move(vars), *idx, order);
  }

  static Polynomial monomial(VarSet vars, ExponentVector exps, Rational coeff,
                             MonomialOrder order = MonomialOrder::Grevlex) {
    if (exps.size() != vars.size()) throw ArityError("exponent vector length mismatch");
    std::vector<Term> terms;
    if (!coeff.is_zero()) terms.push_back({std::move(exps), std::move(coeff)});
    return Polynomial(std::move(vars), order, std::move(terms));
  }

  // Combines duplicates, drops zeros, sorts.
  static Polynomial from_terms(VarSet vars, const std::vector<Term>& terms,
                               MonomialOrder order = MonomialOrder::Grevlex) {
    std::map<ExponentVector, Rational, MonomialCompareDesc> acc{MonomialCompareDesc{order}};
    for (const Term& t : terms) {
      if (t.monomial.size() != vars.size()) throw ArityError("term arity mismatch");
      acc[t.monomial] += t.coeff;
    }
    return from_map(std::move(vars), order, acc);
  }

  const VarSet& vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_constant());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].monomial.is_constant() && terms_[0].coeff == 1;
  }

  // Value of a constant polynomial; nullopt when non-constant.
  std::optional<Rational> constant_value() const {
    if (is_zero()) return Rational(0);
    if (is_constant()) return terms_[0].coeff;
    return std::nullopt;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }
  const ExponentVector& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  int total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.monomial.total_degree());
    return d;
  }

  int degree_in(std::size_t var) const {
    if (var >= vars_.size()) throw UnknownVariable("variable index out of range");
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return from_terms(vars_, terms_, order);
  }

  Polynomial operator-() const {
    std::vector<Term> terms = terms_;
    for (Term& t : terms) t.coeff = -t.coeff;
    return Polynomial(vars_, order_, std::move(terms));
  }

  Polynomial scaled(const Rational& c) const {
    if (c.is_zero()) return zero(vars_, order_);
    std::vector<Term> terms = terms_;
    for (Term& t : terms) t.coeff = Rational(t.coeff * c);
    return Polynomial(vars_, order_, std::move(terms));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.require_same_vars(b);
    const Polynomial& rb = b.order_ == a.order_ ? b : b.with_order(a.order_);
    std::map<ExponentVector, Rational, MonomialCompareDesc> acc{MonomialCompareDesc{a.order_}};
    for (const Term& t : a.terms_) acc[t.monomial] += t.coeff;
    for (const Term& t : rb.terms_) acc[t.monomial] += t.coeff;
    return from_map(a.vars_, a.order_, acc);
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_vars(b);
    const Polynomial& rb = b.order_ == a.order_ ? b : b.with_order(a.order_);
    std::map<ExponentVector, Rational, MonomialCompareDesc> acc{MonomialCompareDesc{a.order_}};
    for (const Term& s : a.terms_)
      for (const Term& t : rb.terms_) acc[s.monomial.times(t.monomial)] += s.coeff * t.coeff;
    return from_map(a.vars_, a.order_, acc);
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return p.scaled(c); }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  // Mathematical equality; false when the variable sets differ.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) return false;
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw ArityError("point arity mismatch");
    // power tables per variable, up to the maximal exponent that occurs
    std::vector<std::vector<Rational>> powers(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      int maxe = 0;
      for (const Term& t : terms_) maxe = std::max(maxe, t.monomial[v]);
      powers[v].reserve(static_cast<std::size_t>(maxe) + 1);
      powers[v].push_back(Rational(1));
      for (int e = 1; e <= maxe; ++e) powers[v].push_back(Rational(powers[v].back() * point[v]));
    }
    Rational sum(0);
    for (const Term& t : terms_) {
      Rational prod = t.coeff;
      for (std::size_t v = 0; v < vars_.size(); ++v)
        if (t.monomial[v] > 0) prod *= powers[v][static_cast<std::size_t>(t.monomial[v])];
      sum += prod;
    }
    return sum;
  }

  // Composition: one image per variable, all images over a common VarSet.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (images.size() != vars_.size()) throw ArityError("one image required per variable");
    for (const Polynomial& img : images)
      if (img.vars() != images[0].vars())
        throw VarSetMismatch("substitution images over different variable sets");
    const VarSet& target = images[0].vars();
    const MonomialOrder target_order = images[0].order();
    std::vector<std::vector<Polynomial>> powers(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      int maxe = 0;
      for (const Term& t : terms_) maxe = std::max(maxe, t.monomial[v]);
      powers[v].push_back(one(target, target_order));
      for (int e = 1; e <= maxe; ++e) powers[v].push_back(powers[v].back() * images[v]);
    }
    Polynomial sum = zero(target, target_order);
    for (const Term& t : terms_) {
      Polynomial prod = constant(target, t.coeff, target_order);
      for (std::size_t v = 0; v < vars_.size(); ++v)
        if (t.monomial[v] > 0) prod *= powers[v][static_cast<std::size_t>(t.monomial[v])];
      sum += prod;
    }
    return sum;
  }

  Polynomial derivative(std::size_t var) const {
    if (var >= vars_.size()) throw UnknownVariable("variable index out of range");
    std::vector<Term> terms;
    for (const Term& t : terms_) {
      const int e = t.monomial[var];
      if (e == 0) continue;
      terms.push_back({t.monomial.with_entry(var, e - 1), Rational(t.coeff * e)});
    }
    return Polynomial(vars_, order_, std::move(terms));
  }

  Polynomial derivative(std::string_view var) const {
    const auto idx = vars_.index_of(var);
    if (!idx) throw UnknownVariable("unknown variable: " + std::string(var));
    return derivative(*idx);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
      const bool negative = t.coeff < 0;
      const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
      if (first) {
        if (negative) out << "-";
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      const bool constant_mono = t.monomial.is_constant();
      if (constant_mono) {
        out << rational_to_string(mag);
        continue;
      }
      if (mag != 1) out << rational_to_string(mag) << "*";
      bool first_var = true;
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        const int e = t.monomial[v];
        if (e == 0) continue;
        if (!first_var) out << "*";
        first_var = false;
        out << vars_.name(v);
        if (e > 1) out << "^" << e;
      }
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  Polynomial(VarSet vars, MonomialOrder order, std::vector<Term> sorted_terms)
      : vars_(std::move(vars)), order_(order), terms_(std::move(sorted_terms)) {}

  static Polynomial from_map(VarSet vars, MonomialOrder order,
                             const std::map<ExponentVector, Rational, MonomialCompareDesc>& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (const auto& [mono, coeff] : acc)
      if (!coeff.is_zero()) terms.push_back({mono, coeff});
    return Polynomial(std::move(vars), order, std::move(terms));
  }

  void require_same_vars(const Polynomial& o) const {
    if (vars_ != o.vars_) throw VarSetMismatch("polynomials over different variable sets");
  }

  VarSet vars_;
  MonomialOrder order_;
  std::vector<Term> terms_;  // descending, leading term first
};

inline Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::one(p.vars(), p.order());
  for (unsigned i = 0; i < e; ++i) result *= p;
  return result;
}

// Leading coefficient scaled to 1; zero stays zero.
inline Polynomial normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Rational& lc = p.leading_coefficient();
  if (lc == 1) return p;
  return p.scaled(Rational(Rational(1) / lc));
}

// Re-expresses p over a variable set containing all of p's variables (looked
// up by name).
inline Polynomial rename_into(const Polynomial& p, const VarSet& target,
                              MonomialOrder order = MonomialOrder::Grevlex) {
  std::vector<Polynomial> images;
  images.reserve(p.vars().size());
  for (const std::string& name : p.vars().names())
    images.push_back(Polynomial::variable(target, name, order));
  return p.substitute(images);
}

struct Homogeneity {
  int degree;   // common total degree of all terms; 0 for the zero polynomial
  bool zero;    // set only for the zero polynomial
};

// Present iff all terms share one total degree. The zero polynomial is
// homogeneous of every degree and is reported with degree 0 and the flag set.
inline std::optional<Homogeneity> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return Homogeneity{0, true};
  const int d = p.terms().front().monomial.total_degree();
  for (const Term& t : p.terms())
    if (t.monomial.total_degree() != d) return std::nullopt;
  return Homogeneity{d, false};
}

}  // namespace conelift
