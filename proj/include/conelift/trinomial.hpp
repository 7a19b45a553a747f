// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conelift/polynomial.hpp"

namespace conelift {

// Hypersurface x_0^{l_0} + x_1^{l_1} + x_2^{l_2} = 0 where each x_i^{l_i} is
// a monomial block over n_i fresh variables with exponent vector l_i.
class TrinomialHypersurface {
 public:
  TrinomialHypersurface(std::vector<long long> l0, std::vector<long long> l1,
                        std::vector<long long> l2)
      : l_{std::move(l0), std::move(l1), std::move(l2)} {
    for (const auto& block : l_) {
      if (block.empty()) throw std::invalid_argument("each block needs at least one exponent");
      for (long long e : block)
        if (e < 1) throw std::invalid_argument("exponents must be positive");
    }
  }

  const std::array<std::vector<long long>, 3>& blocks() const { return l_; }
  const std::vector<long long>& block(std::size_t i) const { return l_.at(i); }
  std::size_t block_size(std::size_t i) const { return l_.at(i).size(); }
  std::size_t ambient_dim() const { return l_[0].size() + l_[1].size() + l_[2].size(); }

  long long block_sum(std::size_t i) const {
    return std::accumulate(l_.at(i).begin(), l_.at(i).end(), 0LL);
  }

 private:
  std::array<std::vector<long long>, 3> l_;
};

inline std::array<long long, 3> l_gcds(const TrinomialHypersurface& t) {
  std::array<long long, 3> g{};
  for (std::size_t i = 0; i < 3; ++i) {
    long long acc = 0;
    for (long long e : t.block(i)) acc = std::gcd(acc, e);
    g[i] = acc;
  }
  return g;
}

// Renumberings choose which block takes the distinguished last role; the
// first two roles are interchangeable. 0 keeps the blocks in place, 1 puts
// block 0 last, 2 puts block 1 last; the remaining blocks keep their
// relative order.
inline std::array<std::size_t, 3> renumbering_roles(int renumbering) {
  switch (renumbering) {
    case 0: return {0, 1, 2};
    case 1: return {1, 2, 0};
    case 2: return {0, 2, 1};
    default: throw std::invalid_argument("renumbering must be 0, 1, or 2");
  }
}

inline std::array<long long, 3> apply_renumbering(const std::array<long long, 3>& l,
                                                  int renumbering) {
  const auto roles = renumbering_roles(renumbering);
  return {l[roles[0]], l[roles[1]], l[roles[2]]};
}

// l after renumbering equals (s*c0, s*c1, c2); the c are pairwise coprime
// and gcd(c2, s) = 1.
struct Case1Witness {
  long long s;
  std::array<long long, 3> c;  // in renumbered order
  int renumbering;
};

// l = (2*c0, 2*c1, 2*c2) with pairwise coprime c.
struct Case2Witness {
  std::array<long long, 3> c;
};

struct NotRational {};

using RationalityWitness = std::variant<NotRational, Case1Witness, Case2Witness>;

struct RationalityVerdict {
  bool rational;
  RationalityWitness witness;
  std::array<long long, 3> l_gcds;
};

namespace detail {

inline bool pairwise_coprime(const std::array<long long, 3>& c) {
  return std::gcd(c[0], c[1]) == 1 && std::gcd(c[0], c[2]) == 1 && std::gcd(c[1], c[2]) == 1;
}

inline std::vector<long long> divisors_ascending(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

// Decides rationality from the block gcd triple alone. Searches renumberings
// ascending, then s ascending over the divisors of gcd of the first two
// renumbered entries, so the returned witness is the least one.
inline RationalityVerdict classify_gcds(const std::array<long long, 3>& l) {
  for (int r = 0; r < 3; ++r) {
    const std::array<long long, 3> lr = apply_renumbering(l, r);
    for (long long s : detail::divisors_ascending(std::gcd(lr[0], lr[1]))) {
      const std::array<long long, 3> c = {lr[0] / s, lr[1] / s, lr[2]};
      if (detail::pairwise_coprime(c) && std::gcd(c[2], s) == 1)
        return {true, Case1Witness{s, c, r}, l};
    }
  }
  if (l[0] % 2 == 0 && l[1] % 2 == 0 && l[2] % 2 == 0) {
    const std::array<long long, 3> c = {l[0] / 2, l[1] / 2, l[2] / 2};
    if (detail::pairwise_coprime(c)) return {true, Case2Witness{c}, l};
  }
  return {false, NotRational{}, l};
}

inline RationalityVerdict classify(const TrinomialHypersurface& t) {
  return classify_gcds(l_gcds(t));
}

// Re-checks the equalities and coprimality conditions a witness asserts.
inline bool verify_verdict(const RationalityVerdict& v) {
  if (const auto* w1 = std::get_if<Case1Witness>(&v.witness)) {
    if (!v.rational) return false;
    const std::array<long long, 3> lr = apply_renumbering(v.l_gcds, w1->renumbering);
    return w1->s >= 1 && lr[0] == w1->s * w1->c[0] && lr[1] == w1->s * w1->c[1] &&
           lr[2] == w1->c[2] && detail::pairwise_coprime(w1->c) &&
           std::gcd(w1->c[2], w1->s) == 1;
  }
  if (const auto* w2 = std::get_if<Case2Witness>(&v.witness)) {
    if (!v.rational) return false;
    return v.l_gcds[0] == 2 * w2->c[0] && v.l_gcds[1] == 2 * w2->c[1] &&
           v.l_gcds[2] == 2 * w2->c[2] && detail::pairwise_coprime(w2->c);
  }
  return !v.rational;
}

// The zero set is a cone exactly when the three block exponent sums agree,
// i.e. when the trinomial is homogeneous.
inline bool is_affine_cone(const TrinomialHypersurface& t) {
  return t.block_sum(0) == t.block_sum(1) && t.block_sum(1) == t.block_sum(2);
}

// Variables are named x<block><position>, e.g. x01, x02, x11, x21.
inline Polynomial to_polynomial(const TrinomialHypersurface& t,
                                MonomialOrder order = MonomialOrder::Grevlex) {
  std::vector<std::string> names;
  names.reserve(t.ambient_dim());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 1; j <= t.block_size(i); ++j)
      names.push_back("x" + std::to_string(i) + std::to_string(j));
  const VarSet vars{names};

  Polynomial sum = Polynomial::zero(vars, order);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<int> exps(vars.size(), 0);
    for (std::size_t j = 0; j < t.block_size(i); ++j)
      exps[offset + j] = static_cast<int>(t.block(i)[j]);
    sum += Polynomial::monomial(vars, ExponentVector(std::move(exps)), Rational(1), order);
    offset += t.block_size(i);
  }
  return sum;
}

enum class SurjectionStatus { Exists, None, Undecided };

inline const char* to_string(SurjectionStatus s) {
  switch (s) {
    case SurjectionStatus::Exists: return "exists";
    case SurjectionStatus::None: return "none";
    case SurjectionStatus::Undecided: return "undecided";
  }
  return "?";
}

struct SurjectionVerdict {
  bool cone;
  SurjectionStatus status;
  std::optional<long long> m;  // dim Y + 1 = k, present when status is Exists
  RationalityVerdict rationality;
  std::string explanation;
};

// For an affine cone, a polynomial surjection from some affine space exists
// exactly when the hypersurface is unirational, which for trinomials reduces
// to the rationality arithmetic; m = dim Y + 1 variables always suffice.
// For a non-cone the criterion does not apply.
inline SurjectionVerdict admits_surjection_from_affine_space(const TrinomialHypersurface& t) {
  const bool cone = is_affine_cone(t);
  RationalityVerdict rat = classify(t);
  const long long k = static_cast<long long>(t.ambient_dim());
  if (!cone) {
    return {false, SurjectionStatus::Undecided, std::nullopt, std::move(rat),
            "block exponent sums differ, so the hypersurface is not a cone and the "
            "surjection criterion does not apply"};
  }
  if (rat.rational) {
    return {true, SurjectionStatus::Exists, k, std::move(rat),
            "affine cone and rational: a polynomial surjection from affine " +
                std::to_string(k) + "-space exists (dim Y + 1 = " + std::to_string(k) + ")"};
  }
  return {true, SurjectionStatus::None, std::nullopt, std::move(rat),
          "affine cone but not unirational: no affine space surjects onto it"};
}

}  // namespace conelift
