// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "conelift/interpolate.hpp"
#include "conelift/parse.hpp"
#include "support/generators.hpp"

using namespace conelift;

namespace {

std::vector<Rational> pt(std::initializer_list<int> coords) {
  std::vector<Rational> p;
  for (int c : coords) p.emplace_back(c);
  return p;
}

// the scaling surjection of the quadric cone fixture, as plain polynomials
std::vector<Polynomial> conic_pi() {
  const VarSet xyz{{"x", "y", "z"}};
  return {parse_polynomial("x^2*z", xyz), parse_polynomial("x*(x*y+1)*z", xyz),
          parse_polynomial("(x*y+1)^2*z", xyz)};
}

}  // namespace

TEST_CASE("point set and assignment validation") {
  CHECK(PointSet({pt({0, 0}), pt({1, 0})}).size() == 2);
  CHECK(PointSet({pt({0, 0})}).arity() == 2);
  CHECK_THROWS_AS(PointSet({}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({pt({0, 0}), pt({1})}), ArityError);
  CHECK_THROWS_AS(PointSet({pt({1, 2}), pt({1, 2})}), DuplicatePoints);

  CHECK(TargetAssignment({pt({1, 2, 3})}).arity() == 3);
  CHECK_THROWS_AS(TargetAssignment({}), std::invalid_argument);
  CHECK_THROWS_AS(TargetAssignment({pt({1}), pt({1, 2})}), ArityError);
  // duplicate preimages are allowed: two points may share a target
  CHECK(TargetAssignment({pt({1, 1}), pt({1, 1})}).size() == 2);
}

TEST_CASE("candidate enumeration order") {
  std::vector<std::vector<int>> seen;
  std::vector<int> v{0, 0};
  while (detail::next_candidate(v, 1)) seen.push_back(v);
  CHECK((seen == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}}));

  seen.clear();
  v = {0, 0};
  while (detail::next_candidate(v, 2)) seen.push_back(v);
  REQUIRE(seen.size() == 8);
  CHECK((seen.front() == std::vector<int>{0, 1}));
  CHECK((seen.back() == std::vector<int>{2, 2}));
}

TEST_CASE("separating functional picks the smallest form") {
  const VarSet x2 = VarSet::numbered("x", 2);

  // ties inside a shell resolve lexicographically
  const PointSet corner({pt({0, 0}), pt({1, 0}), pt({0, 1})});
  CHECK(separating_functional(corner) == parse_polynomial("x1 + 2*x2", x2));

  const PointSet separable({pt({0, 0}), pt({1, 0})});
  CHECK(separating_functional(separable) == parse_polynomial("x1", x2));

  const PointSet diagonal({pt({0, 1}), pt({1, 0})});
  CHECK(separating_functional(diagonal) == parse_polynomial("x2", x2));

  const PointSet single({pt({5, 7})});
  CHECK(separating_functional(single) == parse_polynomial("x2", x2));

  const PointSet line({pt({2}), pt({5})});
  CHECK(separating_functional(line) == parse_polynomial("x1", VarSet{{"x1"}}));

  const VarSet uv{{"u", "v"}};
  CHECK(separating_functional(corner, uv) == parse_polynomial("u + 2*v", uv));
  CHECK_THROWS_AS(separating_functional(corner, VarSet{{"u"}}), ArityError);
}

TEST_CASE("separating functional separates on random point sets") {
  testgen::Rng rng(606);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng.index(5);
    std::set<std::vector<Rational>> distinct;
    while (distinct.size() < n) distinct.insert(rng.point(2, 6));
    const PointSet z(std::vector<std::vector<Rational>>(distinct.begin(), distinct.end()));
    const Polynomial ell = separating_functional(z);
    std::set<Rational> values;
    for (const auto& p : z.points()) values.insert(ell.evaluate(p));
    CHECK(values.size() == z.size());
    CHECK(ell.total_degree() == 1);
  }
}

TEST_CASE("interpolation hits every assigned preimage exactly") {
  const PointSet z({pt({0, 0}), pt({1, 0}), pt({0, 1})});
  const TargetAssignment a({pt({1, 0, 1}), pt({1, 1, 1}), pt({2, 3, 5})});
  const auto phi = interpolate_map(z, a);
  REQUIRE(phi.size() == 3);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(phi[j].evaluate(z.points()[i]) == a.preimages()[i][j]);
  // univariate in the separating form: degree stays below the point count
  for (const auto& c : phi) CHECK(c.total_degree() < 3);

  const TargetAssignment wrong_count({pt({1, 0, 1})});
  CHECK_THROWS_AS(interpolate_map(z, wrong_count), ArityError);
}

TEST_CASE("fixture: two points through the quadric cone") {
  const PointSet z({pt({0}), pt({1})});
  const TargetAssignment a({pt({1, 0, 1}), pt({1, 1, 1})});
  const VarSet t{{"t"}};
  const auto phi_tilde = interpolate_map(z, a, t);
  REQUIRE(phi_tilde.size() == 3);
  CHECK(phi_tilde[0] == parse_polynomial("1", t));
  CHECK(phi_tilde[1] == parse_polynomial("t", t));
  CHECK(phi_tilde[2] == parse_polynomial("1", t));

  const auto phi = compose_with_surjection(conic_pi(), phi_tilde);
  REQUIRE(phi.size() == 3);
  // gamma(1,0,1) = (1,1,1) and gamma(1,1,1) = (1,2,4)
  const std::vector<Rational> at0{Rational(0)};
  const std::vector<Rational> at1{Rational(1)};
  CHECK(phi[0].evaluate(at0) == 1);
  CHECK(phi[1].evaluate(at0) == 1);
  CHECK(phi[2].evaluate(at0) == 1);
  CHECK(phi[0].evaluate(at1) == 1);
  CHECK(phi[1].evaluate(at1) == 2);
  CHECK(phi[2].evaluate(at1) == 4);

  // both images satisfy the cone equation
  const VarSet z3 = VarSet::numbered("z", 3);
  const Polynomial gen = parse_polynomial("z1*z3 - z2^2", z3);
  for (const auto& point : {at0, at1}) {
    std::vector<Rational> image;
    for (const auto& c : phi) image.push_back(c.evaluate(point));
    CHECK(gen.evaluate(image) == 0);
  }
}

TEST_CASE("random instances compose through the surjection") {
  testgen::Rng rng(999);
  const VarSet z3 = VarSet::numbered("z", 3);
  const Polynomial gen = parse_polynomial("z1*z3 - z2^2", z3);
  const auto pi = conic_pi();
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + rng.index(4);
    std::set<std::vector<Rational>> distinct;
    while (distinct.size() < n) distinct.insert(rng.point(2, 5));
    const PointSet z(std::vector<std::vector<Rational>>(distinct.begin(), distinct.end()));
    std::vector<std::vector<Rational>> pre;
    for (std::size_t k = 0; k < n; ++k) pre.push_back(rng.point(3, 5));
    const TargetAssignment a(pre);

    const auto phi_tilde = interpolate_map(z, a);
    const auto phi = compose_with_surjection(pi, phi_tilde);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> image;
      for (const auto& c : phi) image.push_back(c.evaluate(z.points()[k]));
      // the composite hits gamma(a_k) and stays on the cone
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(image[j] == pi[j].evaluate(a.preimages()[k]));
      CHECK(gen.evaluate(image) == 0);
    }
  }
}

TEST_CASE("compose_with_surjection validation") {
  const auto pi = conic_pi();
  const VarSet t{{"t"}};
  const std::vector<Polynomial> two{parse_polynomial("t", t), parse_polynomial("1", t)};
  CHECK_THROWS_AS(compose_with_surjection(pi, two), ArityError);
  CHECK_THROWS_AS(compose_with_surjection(std::span<const Polynomial>{}, two),
                  std::invalid_argument);

  const VarSet xy{{"x", "y"}};
  const std::vector<Polynomial> mixed{parse_polynomial("x", xy),
                                      parse_polynomial("t", t),
                                      parse_polynomial("t", t)};
  const std::vector<Polynomial> three{parse_polynomial("t", t), parse_polynomial("1", t),
                                      parse_polynomial("t^2", t)};
  CHECK_THROWS_AS(compose_with_surjection(mixed, three), VarSetMismatch);
}
