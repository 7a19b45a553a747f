// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "conelift/polynomial.hpp"

namespace conelift {

// Quotient p/d when d divides p exactly; nullopt otherwise. Runs repeated
// leading-term cancellation, which for a true divisor succeeds under any
// monomial order.
inline std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (p.vars() != d.vars()) throw VarSetMismatch("divide_exact over different variable sets");
  if (d.is_zero()) return std::nullopt;
  Polynomial r = p.order() == d.order() ? p : p.with_order(d.order());
  const Polynomial& dd = d;
  std::vector<Term> quotient_terms;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!dd.leading_monomial().divides(lt.monomial)) return std::nullopt;
    Term qt{dd.leading_monomial().quotient_of(lt.monomial),
            Rational(lt.coeff / dd.leading_coefficient())};
    r -= Polynomial::monomial(r.vars(), qt.monomial, qt.coeff, r.order()) * dd;
    quotient_terms.push_back(std::move(qt));
  }
  return Polynomial::from_terms(p.vars(), quotient_terms, p.order());
}

inline bool divides_exactly(const Polynomial& d, const Polynomial& p) {
  return divide_exact(p, d).has_value();
}

namespace detail {

// Coefficients of p seen as a univariate polynomial in vars()[var], indexed by
// degree; entry e has the variable divided out.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  const int deg = p.degree_in(var);
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(std::max(deg, -1) + 1),
                                 Polynomial::zero(p.vars(), p.order()));
  for (const Term& t : p.terms()) {
    const int e = t.monomial[var];
    coeffs[static_cast<std::size_t>(e)] +=
        Polynomial::monomial(p.vars(), t.monomial.with_entry(var, 0), t.coeff, p.order());
  }
  return coeffs;
}

// Pseudo-remainder of p by d in variable var: repeatedly cancels the top
// coefficient after scaling by lc_var(d), so every division is exact.
inline Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& d, std::size_t var) {
  const int dd = d.degree_in(var);
  Polynomial r = p;
  const Polynomial xv = Polynomial::variable(p.vars(), var, p.order());
  const Polynomial lc_d = coefficients_in(d, var)[static_cast<std::size_t>(dd)];
  int dr = r.degree_in(var);
  while (!r.is_zero() && dr >= dd) {
    const Polynomial lc_r = coefficients_in(r, var)[static_cast<std::size_t>(dr)];
    r = lc_d * r - lc_r * pow(xv, static_cast<unsigned>(dr - dd)) * d;
    const int next = r.degree_in(var);
    if (next >= dr && !r.is_zero())
      throw std::logic_error("pseudo-remainder failed to reduce degree");
    dr = next;
  }
  return r;
}

inline Polynomial gcd_impl(Polynomial p, Polynomial q);

// gcd of the univariate-in-var coefficients of p.
inline Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g = Polynomial::zero(p.vars(), p.order());
  for (const Polynomial& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Highest-index variable actually occurring in p or q, if any.
inline std::optional<std::size_t> main_variable(const Polynomial& p, const Polynomial& q) {
  for (std::size_t v = p.vars().size(); v-- > 0;)
    if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return v;
  return std::nullopt;
}

inline Polynomial gcd_impl(Polynomial p, Polynomial q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const auto var = main_variable(p, q);
  if (!var) return Polynomial::one(p.vars(), p.order());  // both nonzero constants
  if (p.degree_in(*var) < q.degree_in(*var)) std::swap(p, q);

  const Polynomial cp = content_in(p, *var);
  const Polynomial cq = content_in(q, *var);
  const Polynomial cg = gcd_impl(cp, cq);
  Polynomial a = *divide_exact(p, cp);
  Polynomial b = *divide_exact(q, cq);

  // primitive PRS on the primitive parts
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b, *var);
    a = std::move(b);
    if (r.is_zero()) {
      b = std::move(r);
    } else {
      b = *divide_exact(r, content_in(r, *var));
    }
  }
  return cg * a;
}

}  // namespace detail

// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.vars() != q.vars()) throw VarSetMismatch("gcd over different variable sets");
  const Polynomial& qq = q.order() == p.order() ? q : q.with_order(p.order());
  return normalized(detail::gcd_impl(p, qq));
}

inline Polynomial gcd(std::span<const Polynomial> ps) {
  if (ps.empty()) throw std::invalid_argument("gcd of empty list");
  Polynomial g = ps[0];
  for (std::size_t i = 1; i < ps.size() && !g.is_one(); ++i) g = gcd(g, ps[i]);
  return normalized(g);
}

// Exact square root with positive leading coefficient, when p is a perfect
// square. Strategy: the square of any nonzero polynomial has even degree in
// every variable it involves, which screens most non-squares cheaply; the
// remaining candidates are reconstructed term by term from the leading term
// downward and the reconstruction is verified by squaring. The descent runs
// under a degree-compatible order so that it terminates on non-squares too.
inline std::optional<Polynomial> square_root(const Polynomial& input) {
  if (input.is_zero()) return input;
  for (std::size_t v = 0; v < input.vars().size(); ++v)
    if (input.degree_in(v) % 2 != 0) return std::nullopt;
  const Polynomial p = input.with_order(MonomialOrder::Grevlex);

  const Term& lt = p.leading_term();
  for (std::size_t v = 0; v < p.vars().size(); ++v)
    if (lt.monomial[v] % 2 != 0) return std::nullopt;
  const auto lc_root = rational_sqrt(lt.coeff);
  if (!lc_root) return std::nullopt;

  ExponentVector half = lt.monomial;
  for (std::size_t v = 0; v < p.vars().size(); ++v)
    half = half.with_entry(v, half[v] / 2);
  Polynomial q = Polynomial::monomial(p.vars(), half, *lc_root, p.order());
  const Polynomial s = q;  // fixed leading part; divisor for each new term
  Polynomial r = p - q * q;
  while (!r.is_zero()) {
    // next term t of the root satisfies LT(r) = 2*s*t
    const Term& rt = r.leading_term();
    if (!s.leading_monomial().divides(rt.monomial)) return std::nullopt;
    const Polynomial t = Polynomial::monomial(
        p.vars(), s.leading_monomial().quotient_of(rt.monomial),
        Rational(rt.coeff / (Rational(2) * s.leading_coefficient())), p.order());
    r -= t * (q + q + t);
    q += t;
  }
  return q.with_order(input.order());
}

}  // namespace conelift
