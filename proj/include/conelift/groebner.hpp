// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "conelift/polynomial.hpp"

namespace conelift {

// Counts leading-term cancellations across one logical computation. limit 0
// means unlimited. Shared by reduction and basis construction so a caller can
// bound the total work of a pipeline.
struct StepBudget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;

  void charge() {
    ++used;
    if (limit != 0 && used > limit) throw BudgetExceeded(used, limit);
  }
};

namespace detail {

inline void require_reducible(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const Polynomial& b : basis)
    if (b.vars() != f.vars()) throw VarSetMismatch("reduction over different variable sets");
}

}  // namespace detail

// Remainder of multivariate division of f by the list, under f's order,
// trying divisors in list order. No term of the result is divisible by any
// nonzero list element's leading monomial.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                         StepBudget* budget = nullptr) {
  detail::require_reducible(f, basis);
  std::vector<Polynomial> divisors;
  divisors.reserve(basis.size());
  for (const Polynomial& b : basis)
    if (!b.is_zero()) divisors.push_back(b.with_order(f.order()));

  Polynomial p = f;
  std::vector<Term> remainder_terms;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool cancelled = false;
    for (const Polynomial& d : divisors) {
      if (!d.leading_monomial().divides(lt.monomial)) continue;
      if (budget) budget->charge();
      const Polynomial factor =
          Polynomial::monomial(p.vars(), d.leading_monomial().quotient_of(lt.monomial),
                               Rational(lt.coeff / d.leading_coefficient()), p.order());
      p -= factor * d;
      cancelled = true;
      break;
    }
    if (!cancelled) {
      remainder_terms.push_back(lt);
      p -= Polynomial::monomial(p.vars(), lt.monomial, lt.coeff, p.order());
    }
  }
  return Polynomial::from_terms(f.vars(), remainder_terms, f.order());
}

struct ReduceTrace {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f = sum cofactors[i]*basis[i] + remainder
};

inline ReduceTrace reduce_with_cofactors(const Polynomial& f, std::span<const Polynomial> basis,
                                         StepBudget* budget = nullptr) {
  detail::require_reducible(f, basis);
  std::vector<Polynomial> cofactors(basis.size(), Polynomial::zero(f.vars(), f.order()));
  Polynomial p = f;
  std::vector<Term> remainder_terms;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool cancelled = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Polynomial& d = basis[i];
      if (d.is_zero() || !d.leading_monomial().divides(lt.monomial)) continue;
      if (budget) budget->charge();
      const Polynomial factor =
          Polynomial::monomial(p.vars(), d.leading_monomial().quotient_of(lt.monomial),
                               Rational(lt.coeff / d.leading_coefficient()), p.order());
      p -= factor * d.with_order(p.order());
      cofactors[i] += factor;
      cancelled = true;
      break;
    }
    if (!cancelled) {
      remainder_terms.push_back(lt);
      p -= Polynomial::monomial(p.vars(), lt.monomial, lt.coeff, p.order());
    }
  }
  return {Polynomial::from_terms(f.vars(), remainder_terms, f.order()), std::move(cofactors)};
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars()) throw VarSetMismatch("S-polynomial over different variable sets");
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("S-polynomial of a zero polynomial");
  const ExponentVector l = ExponentVector::lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a =
      Polynomial::monomial(f.vars(), f.leading_monomial().quotient_of(l),
                           Rational(Rational(1) / f.leading_coefficient()), f.order());
  const Polynomial b =
      Polynomial::monomial(f.vars(), g.leading_monomial().quotient_of(l),
                           Rational(Rational(1) / g.leading_coefficient()), f.order());
  return a * f - b * g.with_order(f.order());
}

// Reduced basis: monic elements, pairwise non-divisible leading monomials,
// every element fully reduced against the rest, sorted ascending by leading
// monomial. This form is unique per (ideal, order), so equal ideals produce
// bit-identical bases.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order)
      : elements_(std::move(elements)), order_(order) {}

  const std::vector<Polynomial>& elements() const { return elements_; }
  MonomialOrder order() const { return order_; }

  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_one(); }

  Polynomial reduce(const Polynomial& f, StepBudget* budget = nullptr) const {
    return conelift::reduce(f.with_order(order_), elements_, budget);
  }

  bool contains(const Polynomial& f, StepBudget* budget = nullptr) const {
    return reduce(f, budget).is_zero();
  }

 private:
  std::vector<Polynomial> elements_;
  MonomialOrder order_;
};

inline GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order,
                                StepBudget* budget = nullptr) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  for (const Polynomial& g : gens)
    if (g.vars() != gens[0].vars())
      throw VarSetMismatch("generators over different variable sets");

  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(normalized(g.with_order(order)));

  struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
  };
  std::vector<Pair> pairs;
  const auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, ExponentVector::lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  // normal strategy: smallest lcm (degree, then active order), then indices
  const auto better = [&](const Pair& a, const Pair& b) {
    const int da = a.lcm.total_degree(), db = b.lcm.total_degree();
    if (da != db) return da < db;
    const int c = compare(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < pairs.size(); ++t)
      if (better(pairs[t], pairs[best])) best = t;
    const Pair pair = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    // coprime leading monomials: the S-polynomial reduces to zero
    if (basis[pair.i].leading_monomial().coprime_with(basis[pair.j].leading_monomial()))
      continue;

    const Polynomial s = s_polynomial(basis[pair.i], basis[pair.j]);
    const Polynomial r = reduce(s, basis, budget);
    if (r.is_zero()) continue;
    basis.push_back(normalized(r));
    push_pairs_with(basis.size() - 1);
  }

  // minimalize: ascending by leading monomial; a divisor sorts before its
  // multiples in any monomial order, so one forward scan suffices
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& kept : minimal)
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // interreduce to fixpoint: tails lose every term divisible by another
  // leading monomial; leading terms are already pairwise non-divisible
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial reduced = normalized(reduce(minimal[i], others, budget));
      if (!(reduced == minimal[i])) {
        minimal[i] = std::move(reduced);
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  return GroebnerBasis(std::move(minimal), order);
}

struct UnitIdealCertificate {
  bool unit;
  GroebnerBasis basis;
};

// Over an algebraically closed field, generators have no common zero exactly
// when the reduced basis is {1}.
inline UnitIdealCertificate is_unit_ideal(std::span<const Polynomial> gens,
                                          MonomialOrder order = MonomialOrder::Grevlex,
                                          StepBudget* budget = nullptr) {
  GroebnerBasis basis = buchberger(gens, order, budget);
  const bool unit = basis.is_unit();
  return {unit, std::move(basis)};
}

// Immutable ideal with its reduced basis computed up front.
class Ideal {
 public:
  Ideal(std::vector<Polynomial> generators, MonomialOrder order = MonomialOrder::Grevlex,
        StepBudget* budget = nullptr)
      : generators_(std::move(generators)),
        basis_(buchberger(generators_, order, budget)) {}

  const std::vector<Polynomial>& generators() const { return generators_; }
  const GroebnerBasis& basis() const { return basis_; }
  MonomialOrder order() const { return basis_.order(); }

  bool contains(const Polynomial& f, StepBudget* budget = nullptr) const {
    return basis_.contains(f, budget);
  }

  bool is_unit() const { return basis_.is_unit(); }

 private:
  std::vector<Polynomial> generators_;
  GroebnerBasis basis_;
};

}  // namespace conelift
