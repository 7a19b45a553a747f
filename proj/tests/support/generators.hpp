// SPDX-License-Identifier: Apache-2.0
#pragma once

// Deterministic value generators for the property tests. All draws are
// modular reductions of raw mt19937_64 output so every platform sees the
// same sequence for a given seed.

#include <cstdint>
#include <random>
#include <vector>

#include "conelift/polynomial.hpp"

namespace testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(raw() % span);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(raw() % n); }

  conelift::Rational rational(std::int64_t bound) {
    const std::int64_t num = int_in(-bound, bound);
    std::int64_t den = int_in(-bound, bound - 1);
    if (den >= 0) ++den;
    return conelift::make_rational(conelift::Int(num), conelift::Int(den));
  }

  conelift::Rational nonzero_rational(std::int64_t bound) {
    for (;;) {
      conelift::Rational q = rational(bound);
      if (!q.is_zero()) return q;
    }
  }

  std::vector<conelift::Rational> point(std::size_t n, std::int64_t bound) {
    std::vector<conelift::Rational> p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.push_back(rational(bound));
    return p;
  }

  conelift::Polynomial polynomial(const conelift::VarSet& vars, int max_var_degree,
                                  std::size_t max_terms, std::int64_t coeff_bound,
                                  conelift::MonomialOrder order =
                                      conelift::MonomialOrder::Grevlex) {
    const std::size_t n_terms = 1 + index(max_terms);
    std::vector<conelift::Term> terms;
    for (std::size_t t = 0; t < n_terms; ++t) {
      std::vector<int> exps(vars.size());
      for (std::size_t v = 0; v < vars.size(); ++v)
        exps[v] = static_cast<int>(index(static_cast<std::size_t>(max_var_degree) + 1));
      terms.push_back({conelift::ExponentVector(std::move(exps)),
                       conelift::Rational(int_in(-coeff_bound, coeff_bound))});
    }
    return conelift::Polynomial::from_terms(vars, terms, order);
  }

  conelift::Polynomial nonzero_polynomial(const conelift::VarSet& vars, int max_var_degree,
                                          std::size_t max_terms, std::int64_t coeff_bound,
                                          conelift::MonomialOrder order =
                                              conelift::MonomialOrder::Grevlex) {
    for (;;) {
      conelift::Polynomial p = polynomial(vars, max_var_degree, max_terms, coeff_bound, order);
      if (!p.is_zero()) return p;
    }
  }

  // degree-d monomial exponents: d units distributed over the variables
  conelift::Polynomial homogeneous(const conelift::VarSet& vars, int degree,
                                   std::size_t max_terms, std::int64_t coeff_bound,
                                   conelift::MonomialOrder order =
                                       conelift::MonomialOrder::Grevlex) {
    const std::size_t n_terms = 1 + index(max_terms);
    std::vector<conelift::Term> terms;
    for (std::size_t t = 0; t < n_terms; ++t) {
      std::vector<int> exps(vars.size(), 0);
      for (int u = 0; u < degree; ++u) ++exps[index(vars.size())];
      conelift::Rational c(int_in(-coeff_bound, coeff_bound));
      if (c.is_zero()) c = conelift::Rational(1);
      terms.push_back({conelift::ExponentVector(std::move(exps)), c});
    }
    conelift::Polynomial p = conelift::Polynomial::from_terms(vars, terms, order);
    if (p.is_zero())
      p = conelift::Polynomial::monomial(
          vars, conelift::ExponentVector::unit(vars.size(), 0, degree), conelift::Rational(1),
          order);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testgen
