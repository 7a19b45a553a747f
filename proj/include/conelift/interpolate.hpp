// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conelift/polynomial.hpp"

namespace conelift {

// Pairwise-distinct rational tuples of a common arity.
class PointSet {
 public:
  explicit PointSet(std::vector<std::vector<Rational>> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("point set must be nonempty");
    for (const auto& p : points_)
      if (p.size() != points_[0].size()) throw ArityError("points of different arity");
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw DuplicatePoints("points " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
  }

  const std::vector<std::vector<Rational>>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t arity() const { return points_[0].size(); }

 private:
  std::vector<std::vector<Rational>> points_;
};

// One chosen preimage per point, all of a common arity (the dimension of the
// surjection's domain).
class TargetAssignment {
 public:
  explicit TargetAssignment(std::vector<std::vector<Rational>> preimages)
      : preimages_(std::move(preimages)) {
    if (preimages_.empty()) throw std::invalid_argument("assignment must be nonempty");
    for (const auto& a : preimages_)
      if (a.size() != preimages_[0].size()) throw ArityError("preimages of different arity");
  }

  const std::vector<std::vector<Rational>>& preimages() const { return preimages_; }
  std::size_t size() const { return preimages_.size(); }
  std::size_t arity() const { return preimages_[0].size(); }

 private:
  std::vector<std::vector<Rational>> preimages_;
};

namespace detail {

// Nonnegative integer vectors of length n, grouped by max-norm ascending,
// lexicographically ascending inside each group. First vector of the whole
// enumeration is (0,...,0,1).
inline bool next_candidate(std::vector<int>& v, int bound) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < bound) {
      ++v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = 0;
      return true;
    }
    // carry
  }
  return false;
}

}  // namespace detail

// Smallest integer linear form (max-norm of the coefficient vector, then
// lexicographic) whose values separate the points. A Vandermonde argument
// guarantees one exists within max-norm below the number of points times the
// coordinate spread, so the search terminates.
inline Polynomial separating_functional(const PointSet& z, const VarSet& vars,
                                        MonomialOrder order = MonomialOrder::Grevlex) {
  if (vars.size() != z.arity())
    throw ArityError("variable set size differs from the point arity");

  const auto separates = [&](const std::vector<int>& coeffs) {
    std::vector<Rational> values;
    values.reserve(z.size());
    for (const auto& p : z.points()) {
      Rational v(0);
      for (std::size_t c = 0; c < coeffs.size(); ++c)
        if (coeffs[c] != 0) v += Rational(coeffs[c]) * p[c];
      for (const Rational& seen : values)
        if (seen == v) return false;
      values.push_back(v);
    }
    return true;
  };

  for (int bound = 1;; ++bound) {
    std::vector<int> v(z.arity(), 0);
    while (detail::next_candidate(v, bound)) {
      if (*std::max_element(v.begin(), v.end()) != bound) continue;  // seen at a smaller bound
      if (!separates(v)) continue;
      std::vector<Term> terms;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0)
          terms.push_back({ExponentVector::unit(vars.size(), c), Rational(v[c])});
      return Polynomial::from_terms(vars, terms, order);
    }
  }
}

inline Polynomial separating_functional(const PointSet& z,
                                        MonomialOrder order = MonomialOrder::Grevlex) {
  return separating_functional(z, VarSet::numbered("x", z.arity()), order);
}

// Polynomial map sending the i-th point to the i-th preimage tuple exactly:
// univariate Lagrange interpolation in a separating linear form, coordinate
// by coordinate. Per-coordinate degree is below the number of points.
inline std::vector<Polynomial> interpolate_map(const PointSet& z, const TargetAssignment& a,
                                               const VarSet& vars,
                                               MonomialOrder order = MonomialOrder::Grevlex) {
  if (z.size() != a.size())
    throw ArityError("one preimage tuple required per point");
  const Polynomial ell = separating_functional(z, vars, order);

  std::vector<Rational> u;
  u.reserve(z.size());
  for (const auto& p : z.points()) u.push_back(ell.evaluate(p));

  // Lagrange basis in ell: L_i = prod_{t != i} (ell - u_t) / (u_i - u_t)
  std::vector<Polynomial> basis;
  basis.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Polynomial num = Polynomial::one(vars, order);
    Rational den(1);
    for (std::size_t t = 0; t < z.size(); ++t) {
      if (t == i) continue;
      num *= ell - Polynomial::constant(vars, u[t], order);
      den *= u[i] - u[t];
    }
    basis.push_back(num.scaled(Rational(Rational(1) / den)));
  }

  std::vector<Polynomial> phi;
  phi.reserve(a.arity());
  for (std::size_t j = 0; j < a.arity(); ++j) {
    Polynomial coord = Polynomial::zero(vars, order);
    for (std::size_t i = 0; i < z.size(); ++i)
      coord += basis[i].scaled(a.preimages()[i][j]);
    phi.push_back(std::move(coord));
  }

  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < a.arity(); ++j)
      if (phi[j].evaluate(z.points()[i]) != a.preimages()[i][j])
        throw std::logic_error("interpolation failed to reproduce a target exactly");
  return phi;
}

inline std::vector<Polynomial> interpolate_map(const PointSet& z, const TargetAssignment& a,
                                               MonomialOrder order = MonomialOrder::Grevlex) {
  return interpolate_map(z, a, VarSet::numbered("x", z.arity()), order);
}

// phi = pi after substituting the coordinates of phi_tilde, i.e. the
// composite map into the surjection's codomain.
inline std::vector<Polynomial> compose_with_surjection(std::span<const Polynomial> pi,
                                                       std::span<const Polynomial> phi_tilde) {
  if (pi.empty()) throw std::invalid_argument("empty surjection tuple");
  for (const Polynomial& p : pi)
    if (p.vars() != pi[0].vars())
      throw VarSetMismatch("surjection coordinates over different variable sets");
  if (phi_tilde.size() != pi[0].vars().size())
    throw ArityError("component count differs from the surjection arity");

  std::vector<Polynomial> phi;
  phi.reserve(pi.size());
  for (const Polynomial& p : pi) phi.push_back(p.substitute(phi_tilde));
  return phi;
}

}  // namespace conelift
