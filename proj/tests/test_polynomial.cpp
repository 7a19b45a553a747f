// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "conelift/parse.hpp"
#include "conelift/polynomial.hpp"
#include "conelift/polynomial_gcd.hpp"
#include "conelift/rational_function.hpp"
#include "support/generators.hpp"

using namespace conelift;

namespace {

const VarSet kXY{{"x", "y"}};
const VarSet kXYZ{{"x", "y", "z"}};

Polynomial P(const std::string& text, const VarSet& vars = kXY,
             MonomialOrder order = MonomialOrder::Grevlex) {
  return parse_polynomial(text, vars, order);
}

}  // namespace

TEST_CASE("varset basics") {
  CHECK(kXYZ.size() == 3);
  CHECK(kXYZ.index_of("y") == 1);
  CHECK_FALSE(kXYZ.index_of("w").has_value());
  CHECK(kXYZ.contains("z"));
  CHECK((VarSet::numbered("x", 3) == VarSet{{"x1", "x2", "x3"}}));
  CHECK(kXY.extended("z") == kXYZ);
  CHECK(kXY.fresh_name("z") == "z");
  CHECK(kXY.fresh_name("x") == "x_");
  CHECK_THROWS_AS(VarSet(std::vector<std::string>{}), std::invalid_argument);
  CHECK_THROWS_AS((VarSet{{"x", "x"}}), std::invalid_argument);
}

TEST_CASE("rational helpers") {
  CHECK(make_rational(Int(2), Int(-4)) == Rational(-1, 2));
  CHECK_THROWS_AS(make_rational(Int(1), Int(0)), InvalidFraction);
  CHECK(is_integer(Rational(6, 3)));
  CHECK_FALSE(is_integer(Rational(1, 3)));
  CHECK(rational_pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(rational_pow(Rational(7), 0) == Rational(1));
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
  CHECK(rational_to_string(Rational(-5, 7)) == "-5/7");
  CHECK(rational_to_string(Rational(4)) == "4");
}

TEST_CASE("canonical form merges duplicates and drops zeros") {
  const ExponentVector xy({1, 1});
  const Polynomial p = Polynomial::from_terms(
      kXY, {{xy, Rational(2)}, {xy, Rational(-2)}, {ExponentVector({1, 0}), Rational(3)}});
  REQUIRE(p.terms().size() == 1);
  CHECK(p == P("3*x"));
  CHECK(Polynomial::from_terms(kXY, {{xy, Rational(1)}, {xy, Rational(-1)}}).is_zero());
  CHECK(Polynomial::zero(kXY).terms().empty());
}

TEST_CASE("monomial order rules") {
  // equal total degree under grevlex: the rightmost differing exponent is
  // smaller on the larger monomial
  CHECK(compare(ExponentVector({2, 0}), ExponentVector({1, 1}), MonomialOrder::Grevlex) > 0);
  CHECK(compare(ExponentVector({1, 1}), ExponentVector({0, 2}), MonomialOrder::Grevlex) > 0);
  CHECK(compare(ExponentVector({3, 0}), ExponentVector({0, 2}), MonomialOrder::Grevlex) > 0);
  CHECK(compare(ExponentVector({1, 0}), ExponentVector({0, 1}), MonomialOrder::Lex) > 0);

  // x*z^2 vs y^3 separates the two orders
  const Polynomial g = P("x*z^2 + y^3", kXYZ, MonomialOrder::Grevlex);
  const Polynomial l = P("x*z^2 + y^3", kXYZ, MonomialOrder::Lex);
  CHECK(g.leading_term().monomial == ExponentVector({0, 3, 0}));
  CHECK(l.leading_term().monomial == ExponentVector({1, 0, 2}));
  CHECK(g == l);  // same polynomial, different representation
  CHECK(g.with_order(MonomialOrder::Lex).terms() == l.terms());
}

TEST_CASE("arithmetic oracles") {
  CHECK(P("(x+y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
  CHECK(pow(P("x + 1"), 3) == P("x^3 + 3*x^2 + 3*x + 1"));
  CHECK((P("x") - P("x")).is_zero());
  CHECK(P("x*y").scaled(Rational(-3, 2)) == P("-3/2*x*y"));
  CHECK((Rational(2) * P("x + y")) == P("2*x + 2*y"));
  CHECK(-P("x - y") == P("y - x"));
  CHECK_THROWS_AS(P("x") + Polynomial::one(kXYZ), VarSetMismatch);
}

TEST_CASE("degrees and leading data") {
  const Polynomial p = P("x^3*y + x*y^2 + 5");
  CHECK(p.total_degree() == 4);
  CHECK(p.degree_in(0) == 3);
  CHECK(p.degree_in(1) == 2);
  CHECK(Polynomial::zero(kXY).total_degree() == -1);
  CHECK(p.leading_coefficient() == 1);
  CHECK(p.leading_monomial() == ExponentVector({3, 1}));
  CHECK_THROWS_AS(Polynomial::zero(kXY).leading_term(), std::logic_error);
  CHECK_THROWS_AS(p.degree_in(5), UnknownVariable);
}

TEST_CASE("constants") {
  CHECK(Polynomial::one(kXY).is_one());
  CHECK(Polynomial::constant(kXY, Rational(0)).is_zero());
  CHECK(P("7/2").constant_value() == Rational(7, 2));
  CHECK(Polynomial::zero(kXY).constant_value() == Rational(0));
  CHECK_FALSE(P("x + 1").constant_value().has_value());
}

TEST_CASE("evaluate") {
  const Polynomial p = P("x^2*y + 2");
  const std::vector<Rational> at{Rational(3, 2), Rational(4)};
  CHECK(p.evaluate(at) == Rational(11));
  CHECK(Polynomial::zero(kXY).evaluate(at) == Rational(0));
  const std::vector<Rational> wrong{Rational(1)};
  CHECK_THROWS_AS(p.evaluate(wrong), ArityError);
}

TEST_CASE("substitute") {
  const VarSet t{{"t"}};
  const std::vector<Polynomial> images{P("t^2", t), P("t^3", t)};
  CHECK(P("x*y + 1").substitute(images) == P("t^5 + 1", t));

  const std::vector<Polynomial> swap{P("y"), P("x")};
  CHECK(P("x^2 - y").substitute(swap) == P("y^2 - x"));

  const std::vector<Polynomial> one_image{P("t", t)};
  CHECK_THROWS_AS(P("x + y").substitute(one_image), ArityError);
  const std::vector<Polynomial> mixed{P("t", t), P("x")};
  CHECK_THROWS_AS(P("x + y").substitute(mixed), VarSetMismatch);
}

TEST_CASE("derivative") {
  CHECK(P("x^3*y + x").derivative(0) == P("3*x^2*y + 1"));
  CHECK(P("x^3*y + x").derivative("y") == P("x^3"));
  CHECK(P("5").derivative(0).is_zero());
  CHECK_THROWS_AS(P("x").derivative("w"), UnknownVariable);
}

TEST_CASE("homogeneity") {
  const auto h = homogeneous_degree(P("x^2 + x*y"));
  REQUIRE(h.has_value());
  CHECK(h->degree == 2);
  CHECK_FALSE(h->zero);
  CHECK_FALSE(homogeneous_degree(P("x^2 + x")).has_value());
  const auto z = homogeneous_degree(Polynomial::zero(kXY));
  REQUIRE(z.has_value());
  CHECK(z->zero);
}

TEST_CASE("to_string oracles parse back") {
  CHECK(Polynomial::zero(kXY).to_string() == "0");
  CHECK(P("3 - x").to_string() == "-x + 3");
  CHECK(P("-5/2").to_string() == "-5/2");
  CHECK(P("y^2 + x^2 + x*y").to_string() == "x^2 + x*y + y^2");
  CHECK(P("2*x*y - y").to_string() == "2*x*y - y");
  CHECK(P("x*y^2*x", kXYZ).to_string() == "x^2*y^2");
  for (const char* text : {"x^2 - 3*x*y + 1/2", "-x + 3", "0", "x*z^2 + y^3"}) {
    const Polynomial p = P(text, kXYZ);
    CHECK(P(p.to_string(), kXYZ) == p);
  }
}

TEST_CASE("normalized and rename_into") {
  CHECK(normalized(P("2*x + 4")) == P("x + 2"));
  CHECK(normalized(Polynomial::zero(kXY)).is_zero());
  const Polynomial p = P("x^2 + y");
  const Polynomial moved = rename_into(p, kXYZ);
  CHECK(moved.vars() == kXYZ);
  CHECK(moved == P("x^2 + y", kXYZ));
  CHECK_THROWS_AS(rename_into(P("z + 1", kXYZ), kXY), UnknownVariable);
}

TEST_CASE("ring axioms on random inputs") {
  testgen::Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = rng.polynomial(kXY, 3, 4, 6);
    const Polynomial b = rng.polynomial(kXY, 3, 4, 6);
    const Polynomial c = rng.polynomial(kXY, 3, 4, 6);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Polynomial::zero(kXY) == a);
    CHECK(a * Polynomial::one(kXY) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  testgen::Rng rng(55);
  for (int i = 0; i < 40; ++i) {
    const Polynomial a = rng.polynomial(kXY, 3, 4, 5);
    const Polynomial b = rng.polynomial(kXY, 3, 4, 5);
    const auto pt = rng.point(2, 4);
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST_CASE("euler identity for homogeneous polynomials") {
  testgen::Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    const int deg = 1 + static_cast<int>(rng.index(4));
    const Polynomial f = rng.homogeneous(kXYZ, deg, 4, 5);
    Polynomial sum = Polynomial::zero(kXYZ);
    for (std::size_t v = 0; v < kXYZ.size(); ++v)
      sum += Polynomial::variable(kXYZ, v) * f.derivative(v);
    CHECK(sum == f.scaled(Rational(deg)));
  }
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(P("x^2 - y^2"), P("x - y")) == P("x + y"));
  CHECK(divide_exact(P("x^2 + y^2"), P("x + y")) == std::nullopt);
  CHECK(divide_exact(P("x"), Polynomial::zero(kXY)) == std::nullopt);
  CHECK(divide_exact(Polynomial::zero(kXY), P("x"))->is_zero());
  CHECK(divides_exactly(P("x + 1"), P("x^2 + 2*x + 1")));
  CHECK_FALSE(divides_exactly(P("x + 1"), P("x^2 + 1")));
}

TEST_CASE("gcd oracles") {
  CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
  CHECK(gcd(P("2*x^2"), P("4*x*y")) == P("x"));  // monic result
  CHECK(gcd(Polynomial::zero(kXY), P("3*y")) == P("y"));
  CHECK(gcd(Polynomial::zero(kXY), Polynomial::zero(kXY)).is_zero());
  CHECK(gcd(P("6"), P("4")).is_one());  // constants are units
  CHECK(gcd(P("x + 1"), P("x + 2")).is_one());

  const std::vector<Polynomial> list{P("x^2*y"), P("x*y^2"), P("x*y")};
  CHECK(gcd(list) == P("x*y"));
  CHECK_THROWS_AS(gcd(std::span<const Polynomial>{}), std::invalid_argument);
  CHECK_THROWS_AS(gcd(P("x"), Polynomial::one(kXYZ)), VarSetMismatch);
}

TEST_CASE("gcd divides both arguments") {
  testgen::Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    const Polynomial p = rng.polynomial(kXY, 3, 3, 4);
    const Polynomial q = rng.polynomial(kXY, 3, 3, 4);
    const Polynomial m = rng.nonzero_polynomial(kXY, 2, 2, 3);
    const Polynomial g = gcd(p * m, q * m);
    if (p.is_zero() && q.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(divides_exactly(g, p * m));
    CHECK(divides_exactly(g, q * m));
    CHECK(divides_exactly(normalized(m), g));  // the common factor survives
    CHECK(g.leading_coefficient() == 1);
  }
}

TEST_CASE("square_root oracles") {
  CHECK(square_root(P("(x + y)^2")) == P("x + y"));
  CHECK(square_root(P("x^2*y^2")) == P("x*y"));
  CHECK(square_root(Polynomial::zero(kXY))->is_zero());
  CHECK(square_root(P("9/4")) == P("3/2"));
  CHECK_FALSE(square_root(P("x1^2*x3", VarSet::numbered("x", 3))).has_value());
  CHECK_FALSE(square_root(P("x^2 + y^2")).has_value());
  CHECK_FALSE(square_root(P("-x^2")).has_value());
  CHECK_FALSE(square_root(P("2*x^2")).has_value());
  CHECK_FALSE(square_root(P("x^2 + 1")).has_value());
  // non-square under lex input order still terminates (internal descent is
  // degree-compatible)
  CHECK_FALSE(square_root(P("x^2 + y^2 + 1", kXY, MonomialOrder::Lex)).has_value());
}

TEST_CASE("square_root round-trips random squares") {
  testgen::Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const Polynomial p = rng.nonzero_polynomial(kXY, 3, 4, 5);
    const auto r = square_root(p * p);
    REQUIRE(r.has_value());
    CHECK(*r * *r == p * p);
    CHECK(r->leading_coefficient() > 0);
    CHECK(r->order() == p.order());
  }
}

TEST_CASE("rational function reduction") {
  const RationalFunction f(P("x^2 - y^2"), P("x - y"));
  CHECK(f.is_polynomial());
  CHECK(f.numerator() == P("x + y"));

  const RationalFunction g(P("x"), P("2*y"));
  CHECK(g.numerator() == P("1/2*x"));
  CHECK(g.denominator() == P("y"));  // denominator kept monic
  CHECK(g.to_string() == "(1/2*x)/(y)");

  CHECK(RationalFunction(P("0"), P("x")).is_zero());
  CHECK(RationalFunction(P("0"), P("x")).denominator().is_one());
  CHECK_THROWS_AS(RationalFunction(P("x"), Polynomial::zero(kXY)), InvalidFraction);
  CHECK_THROWS_AS(RationalFunction(P("x"), Polynomial::one(kXYZ)), VarSetMismatch);
}

TEST_CASE("rational function arithmetic") {
  const RationalFunction inv_x(Polynomial::one(kXY), P("x"));
  const RationalFunction inv_y(Polynomial::one(kXY), P("y"));
  CHECK(inv_x + inv_y == RationalFunction(P("x + y"), P("x*y")));
  CHECK(inv_x * inv_y == RationalFunction(Polynomial::one(kXY), P("x*y")));
  CHECK(inv_x / inv_y == RationalFunction(P("y"), P("x")));
  CHECK((inv_x - inv_x).is_zero());
  CHECK(-inv_x == RationalFunction(P("-1"), P("x")));
  CHECK_THROWS_AS(inv_x / RationalFunction::zero(kXY), InvalidFraction);

  testgen::Rng rng(12);
  for (int i = 0; i < 25; ++i) {
    const RationalFunction a(rng.polynomial(kXY, 2, 3, 4), rng.nonzero_polynomial(kXY, 2, 2, 3));
    const RationalFunction b(rng.polynomial(kXY, 2, 3, 4), rng.nonzero_polynomial(kXY, 2, 2, 3));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RationalFunction::zero(kXY));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
