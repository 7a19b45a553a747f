// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conelift/groebner.hpp"
#include "conelift/parse.hpp"
#include "conelift/rational_function.hpp"

namespace conelift {

// The coordinate tuple has a common zero, so it defines a map that is
// undefined somewhere: it cannot be normalized to hit a fixed affine chart
// everywhere. Carries the proper reduced basis as evidence.
struct BasePointDetected : Error {
  explicit BasePointDetected(GroebnerBasis evidence)
      : Error("coordinates share a common zero (proper ideal of degree-positive basis)"),
        basis(std::move(evidence)) {}

  GroebnerBasis basis;
};

// x -> [c_1(x) : ... : c_k(x)], defined up to a common nonzero factor.
class ProjectiveMapRep {
 public:
  explicit ProjectiveMapRep(std::vector<RationalFunction> coords)
      : coords_(std::move(coords)) {
    if (coords_.size() < 2)
      throw std::invalid_argument("projective map needs at least two coordinates");
    for (const RationalFunction& c : coords_)
      if (c.vars() != coords_[0].vars())
        throw VarSetMismatch("coordinates over different variable sets");
    bool any = false;
    for (const RationalFunction& c : coords_) any = any || !c.is_zero();
    if (!any) throw std::invalid_argument("all coordinates are identically zero");
  }

  static ProjectiveMapRep from_polynomials(std::vector<Polynomial> coords) {
    std::vector<RationalFunction> rf;
    rf.reserve(coords.size());
    for (Polynomial& p : coords) rf.emplace_back(std::move(p));
    return ProjectiveMapRep(std::move(rf));
  }

  const std::vector<RationalFunction>& coords() const { return coords_; }
  std::size_t arity() const { return coords_[0].vars().size(); }
  std::size_t size() const { return coords_.size(); }
  const VarSet& vars() const { return coords_[0].vars(); }

 private:
  std::vector<RationalFunction> coords_;
};

struct LiftResult {
  std::vector<Polynomial> h;      // coprime polynomial tuple, no common zero
  GroebnerBasis certificate;      // reduced basis {1} witnessing the unit ideal
  std::size_t base_chart;         // smallest index with a nonzero coordinate
};

namespace detail {

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  const Polynomial g = gcd(a, b);
  return normalized(*divide_exact(a * b, g));
}

}  // namespace detail

// Polynomial tuple projectively equal to coords: every entry is multiplied by
// the least common multiple of the denominators. The result is cross-checked
// against the input before returning.
inline std::vector<Polynomial> clear_denominators(std::span<const RationalFunction> coords) {
  if (coords.empty()) throw std::invalid_argument("no coordinates");
  for (const RationalFunction& c : coords)
    if (c.vars() != coords[0].vars())
      throw VarSetMismatch("coordinates over different variable sets");
  bool any = false;
  for (const RationalFunction& c : coords) any = any || !c.is_zero();
  if (!any) throw std::invalid_argument("all coordinates are identically zero");

  const VarSet& vars = coords[0].vars();
  const MonomialOrder order = coords[0].numerator().order();
  Polynomial common = Polynomial::one(vars, order);
  for (const RationalFunction& c : coords)
    common = detail::poly_lcm(common, c.denominator());

  std::vector<Polynomial> h;
  h.reserve(coords.size());
  for (const RationalFunction& c : coords)
    h.push_back(c.numerator() * *divide_exact(common, c.denominator()));

  // cross-products: h_i * num_j * den_i == h_j * num_i * den_j for i < j
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      const Polynomial lhs = h[i] * coords[j].numerator() * coords[i].denominator();
      const Polynomial rhs = h[j] * coords[i].numerator() * coords[j].denominator();
      if (!(lhs == rhs)) throw std::logic_error("denominator clearing lost exactness");
    }
  return h;
}

// Divides out the gcd of all entries, then rescales so the first nonzero
// entry is monic. Idempotent; projectively equal to the input.
inline std::vector<Polynomial> coprime_reduce(std::span<const Polynomial> h) {
  if (h.empty()) throw std::invalid_argument("no coordinates");
  bool any = false;
  for (const Polynomial& p : h) any = any || !p.is_zero();
  if (!any) throw std::invalid_argument("all coordinates are identically zero");

  const Polynomial g = gcd(h);
  std::vector<Polynomial> out;
  out.reserve(h.size());
  for (const Polynomial& p : h) out.push_back(*divide_exact(p, g));

  for (const Polynomial& p : out) {
    if (p.is_zero()) continue;
    const Rational lc = p.leading_coefficient();
    if (lc != 1) {
      const Rational inv = Rational(Rational(1) / lc);
      for (Polynomial& q : out) q = q.scaled(inv);
    }
    break;
  }
  return out;
}

// True iff the two tuples agree as projective maps: all 2x2 minors
// h_i*g_j - h_j*g_i vanish identically.
inline bool verify_projective_equality(std::span<const Polynomial> h,
                                       std::span<const Polynomial> g) {
  if (h.size() != g.size() || h.size() < 2)
    throw ArityError("tuples must have equal length >= 2");
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      if (!(h[i] * g[j] - h[j] * g[i]).is_zero()) return false;
  return true;
}

inline bool verify_projective_equality(std::span<const Polynomial> h,
                                       std::span<const RationalFunction> g) {
  if (h.size() != g.size() || h.size() < 2)
    throw ArityError("tuples must have equal length >= 2");
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      const RationalFunction lhs = RationalFunction(h[i]) * g[j];
      const RationalFunction rhs = RationalFunction(h[j]) * g[i];
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// Turns a projective morphism given by rational coordinates into a coprime
// polynomial tuple with no common zero, certified by a unit-ideal basis.
// A proper ideal after coprime reduction means the input had a base point
// and only defined a rational map; that is reported as BasePointDetected.
inline LiftResult lift_morphism(const ProjectiveMapRep& map,
                                MonomialOrder order = MonomialOrder::Grevlex,
                                StepBudget* budget = nullptr) {
  std::size_t chart = 0;
  while (map.coords()[chart].is_zero()) ++chart;

  std::vector<Polynomial> cleared = clear_denominators(map.coords());
  std::vector<Polynomial> h = coprime_reduce(cleared);
  for (Polynomial& p : h) p = p.with_order(order);

  UnitIdealCertificate cert = is_unit_ideal(h, order, budget);
  if (!cert.unit) throw BasePointDetected(std::move(cert.basis));

  if (!verify_projective_equality(std::span<const Polynomial>(h), map.coords()))
    throw std::logic_error("lift is not projectively equal to its input");
  return {std::move(h), std::move(cert.basis), chart};
}

// Fixed fixture for the weighted-projective obstruction: the map
// (x1, x2, x3) -> (x1^2*x3, x1*x2*x3, x2^2*x3) lands in a weighted plane
// whose first coordinate has weight 2, so any would-be lift h must satisfy
// h1^2 = lambda * x1^2*x3. No polynomial squares to x1^2*x3: the degree in
// x3 is odd, and squares have even degree in every variable.
struct WpsReport {
  Polynomial chart_image;              // the polynomial a square must match
  bool odd_variable_degree;            // some variable occurs with odd degree
  std::optional<Polynomial> root;      // the square root, when one exists
  bool contradiction;                  // no lift with these weights can exist
  std::vector<std::string> notes;
};

inline WpsReport wps_obstruction_demo(std::optional<Polynomial> chart_image = std::nullopt) {
  Polynomial target = chart_image.has_value()
                          ? *chart_image
                          : parse_polynomial("x1^2*x3", VarSet::numbered("x", 3));
  WpsReport report{target, false, std::nullopt, false, {}};
  report.notes.push_back("map (x1^2*x3, x1*x2*x3, x2^2*x3) into a weight-(2,1,1) plane");
  report.notes.push_back("a lift h needs h1^2 = lambda * " + target.to_string() +
                         " with lambda a nonzero scalar; scaling h1 reduces to lambda = 1");

  for (std::size_t v = 0; v < target.vars().size() && !report.odd_variable_degree; ++v)
    if (target.degree_in(v) > 0 && target.degree_in(v) % 2 != 0) {
      report.odd_variable_degree = true;
      report.notes.push_back("degree in " + target.vars().name(v) + " is " +
                             std::to_string(target.degree_in(v)) +
                             ", odd; the square of a polynomial has even degree in every variable");
    }

  report.root = square_root(target);
  report.contradiction = !report.root.has_value();
  if (report.root)
    report.notes.push_back("square root exists: " + report.root->to_string() +
                           "; no obstruction for this input");
  else
    report.notes.push_back("no polynomial square root exists; the assumed lift is impossible");
  return report;
}

}  // namespace conelift
