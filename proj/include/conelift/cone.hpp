// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "conelift/lift.hpp"

namespace conelift {

// A coordinate tuple fails symbolic membership: some generator does not
// vanish after substitution.
struct NotIntoCone : Error {
  explicit NotIntoCone(std::size_t generator)
      : Error("tuple does not map into the cone: generator #" + std::to_string(generator) +
              " does not vanish on it"),
        generator_index(generator) {}

  std::size_t generator_index;
};

// Zero set of homogeneous generators in k ambient variables, stable under
// scalar multiplication. An empty generator list means the whole space.
// dim_y is caller-supplied bookkeeping, never computed.
class ConeVariety {
 public:
  ConeVariety(VarSet ambient, std::vector<Polynomial> generators,
              std::optional<int> dim_y = std::nullopt)
      : ambient_(std::move(ambient)), generators_(std::move(generators)), dim_y_(dim_y) {
    for (const Polynomial& g : generators_) {
      if (g.vars() != ambient_)
        throw VarSetMismatch("generator not over the ambient variable set");
      if (!homogeneous_degree(g))
        throw NotHomogeneous("cone generator is not homogeneous: " + g.to_string());
    }
  }

  static ConeVariety full_space(VarSet ambient, std::optional<int> dim_y = std::nullopt) {
    return ConeVariety(std::move(ambient), {}, dim_y);
  }

  const VarSet& ambient() const { return ambient_; }
  std::size_t ambient_dim() const { return ambient_.size(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::optional<int> dim_y() const { return dim_y_; }

 private:
  VarSet ambient_;
  std::vector<Polynomial> generators_;
  std::optional<int> dim_y_;
};

// True iff every generator vanishes identically on the tuple.
inline bool verify_maps_into_cone(std::span<const Polynomial> h, const ConeVariety& cone) {
  if (h.size() != cone.ambient_dim())
    throw ArityError("tuple length differs from the ambient dimension");
  for (const Polynomial& p : h)
    if (p.vars() != h[0].vars()) throw VarSetMismatch("tuple over different variable sets");
  for (const Polynomial& g : cone.generators())
    if (!g.substitute(h).is_zero()) return false;
  return true;
}

inline std::optional<std::size_t> first_failing_generator(std::span<const Polynomial> h,
                                                          const ConeVariety& cone) {
  if (h.size() != cone.ambient_dim())
    throw ArityError("tuple length differs from the ambient dimension");
  for (std::size_t i = 0; i < cone.generators().size(); ++i)
    if (!cone.generators()[i].substitute(h).is_zero()) return i;
  return std::nullopt;
}

// The map (x, z) -> (h_1(x)z, ..., h_k(x)z) from d+1 variables onto the cone
// spanned by the lines through the image of h.
struct ConeSurjection {
  std::vector<Polynomial> h;       // k polynomials in d variables
  std::vector<Polynomial> gamma;   // k polynomials in d+1 variables, gamma_i = h_i*z
  VarSet domain_vars;              // h's variables plus the scaling variable (last)
  std::size_t m;                   // d+1

  const std::string& scaling_variable() const { return domain_vars.name(domain_vars.size() - 1); }
};

namespace detail {

inline ConeSurjection make_surjection(std::vector<Polynomial> h) {
  const VarSet& xs = h[0].vars();
  const MonomialOrder order = h[0].order();
  const VarSet domain = xs.extended(xs.fresh_name("z"));
  const Polynomial z = Polynomial::variable(domain, domain.size() - 1, order);
  std::vector<Polynomial> gamma;
  gamma.reserve(h.size());
  for (const Polynomial& p : h) gamma.push_back(rename_into(p, domain, order) * z);
  const std::size_t m = domain.size();
  return {std::move(h), std::move(gamma), domain, m};
}

}  // namespace detail

// Certifies that h has no common zero and lands in the cone, then attaches
// the scaling variable. When the projectivized input map is onto the
// projectivization of the cone, the image of the result is the whole cone.
inline ConeSurjection build_gamma(std::span<const Polynomial> h, const ConeVariety& cone,
                                  StepBudget* budget = nullptr) {
  if (h.empty()) throw ArityError("empty tuple");
  if (h.size() != cone.ambient_dim())
    throw ArityError("tuple length differs from the ambient dimension");
  UnitIdealCertificate cert = is_unit_ideal(h, h[0].order(), budget);
  if (!cert.unit) throw BasePointDetected(std::move(cert.basis));
  if (const auto bad = first_failing_generator(h, cone)) throw NotIntoCone(*bad);
  return detail::make_surjection(std::vector<Polynomial>(h.begin(), h.end()));
}

// Same, trusting the unit-ideal certificate carried by the lift.
inline ConeSurjection build_gamma(const LiftResult& lift, const ConeVariety& cone) {
  if (!lift.certificate.is_unit())
    throw BasePointDetected(GroebnerBasis(lift.certificate));
  if (const auto bad = first_failing_generator(lift.h, cone)) throw NotIntoCone(*bad);
  return detail::make_surjection(lift.h);
}

// The scaling identity F(z*h) = z^{deg F} * F(h), the coordinate form of
// "the image of a line through h(x) stays on the cone".
inline bool verify_gamma_scaling(const Polynomial& F, std::span<const Polynomial> h) {
  const auto hom = homogeneous_degree(F);
  if (!hom) throw NotHomogeneous("scaling identity needs a homogeneous polynomial");
  if (hom->zero) return true;
  if (h.size() != F.vars().size())
    throw ArityError("tuple length differs from the ambient dimension");

  const VarSet& xs = h[0].vars();
  const MonomialOrder order = h[0].order();
  const VarSet domain = xs.extended(xs.fresh_name("z"));
  const Polynomial z = Polynomial::variable(domain, domain.size() - 1, order);

  std::vector<Polynomial> scaled, plain;
  scaled.reserve(h.size());
  plain.reserve(h.size());
  for (const Polynomial& p : h) {
    plain.push_back(rename_into(p, domain, order));
    scaled.push_back(plain.back() * z);
  }
  const Polynomial lhs = F.substitute(scaled);
  const Polynomial rhs = pow(z, static_cast<unsigned>(hom->degree)) * F.substitute(plain);
  return lhs == rhs;
}

struct SampleFailure {
  std::size_t sample_index;
  std::size_t generator_index;
  std::vector<Rational> domain_point;
  std::vector<Rational> image_point;
  Rational value;  // nonzero value of the generator at the image point
};

struct SampleReport {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::int64_t coord_bound = 0;
  std::vector<std::size_t> generator_pass_counts;
  std::vector<SampleFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

// Evaluates every generator at gamma(a) for pseudo-random rational points a.
// Draws are modular reductions of raw mt19937_64 output, so reports are
// identical across platforms for a fixed seed.
inline SampleReport sample_membership(const ConeSurjection& surj, const ConeVariety& cone,
                                      std::size_t n_samples, std::uint64_t seed,
                                      std::int64_t coord_bound = 10) {
  if (coord_bound < 1) throw std::invalid_argument("coord_bound must be at least 1");
  if (surj.gamma.size() != cone.ambient_dim())
    throw ArityError("surjection arity differs from the ambient dimension");

  SampleReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  report.coord_bound = coord_bound;
  report.generator_pass_counts.assign(cone.generators().size(), 0);

  std::mt19937_64 rng(seed);
  const auto draw_numerator = [&]() -> std::int64_t {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * coord_bound + 1)) -
           coord_bound;
  };
  const auto draw_denominator = [&]() -> std::int64_t {
    std::int64_t v =
        static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * coord_bound)) -
        coord_bound;
    if (v >= 0) ++v;  // skip zero, keep the range symmetric
    return v;
  };

  for (std::size_t s = 0; s < n_samples; ++s) {
    std::vector<Rational> domain_point;
    domain_point.reserve(surj.m);
    for (std::size_t c = 0; c < surj.m; ++c) {
      const std::int64_t num = draw_numerator();
      const std::int64_t den = draw_denominator();
      domain_point.push_back(make_rational(Int(num), Int(den)));
    }
    std::vector<Rational> image_point;
    image_point.reserve(surj.gamma.size());
    for (const Polynomial& g : surj.gamma) image_point.push_back(g.evaluate(domain_point));
    for (std::size_t gi = 0; gi < cone.generators().size(); ++gi) {
      const Rational value = cone.generators()[gi].evaluate(image_point);
      if (value.is_zero())
        ++report.generator_pass_counts[gi];
      else
        report.failures.push_back({s, gi, domain_point, image_point, value});
    }
  }
  return report;
}

}  // namespace conelift
