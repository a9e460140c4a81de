#include <catch_amalgamated.hpp>

#include <random>

#include <ddisc/poly_division.hpp>
#include <ddisc/poly_io.hpp>
#include <ddisc/polynomial.hpp>

#include "test_support.hpp"

using namespace ddisc;
using namespace ddisc::testing;

namespace {

VarSetPtr xy() { return make_varset({"x", "y"}); }

}  // namespace

TEST_CASE("ring_arith examples", "[polyring]") {
  auto vs = family_vars(1);
  auto x = var(vs, "x"), a0 = var(vs, "a0"), a1 = var(vs, "a1");
  auto one = cst(vs, 1);

  CHECK(ring_arith(x + one, x - one, RingOp::mul) == x * x - one);
  CHECK(ring_arith(x + a0, Polynomial(vs), RingOp::add) == x + a0);
  CHECK(ring_arith(a1 * x + a0, a1 * x - a0, RingOp::mul) == a1 * a1 * x * x - a0 * a0);
  CHECK((x - x).is_zero());
  CHECK((x - x).terms().empty());
}

TEST_CASE("ring_arith rejects mismatched VarSets", "[polyring]") {
  auto p = var(family_vars(1), "x");
  auto q = var(family_vars(2), "x");
  CHECK_THROWS_AS(p + q, UsageError);
  CHECK_THROWS_AS(p * q, UsageError);
}

TEST_CASE("derivative examples", "[polyring]") {
  auto vs = family_vars(3);
  auto x = var(vs, "x"), a0 = var(vs, "a0"), a1 = var(vs, "a1"), a2 = var(vs, "a2"),
       a3 = var(vs, "a3");
  auto two = cst(vs, 2);

  CHECK(derivative(a2 * x * x + a1 * x + a0, "x") == two * a2 * x + a1);
  CHECK(derivative(a0, "x").is_zero());
  CHECK(derivative(a1 * a1 * a2 * a2 - cst(vs, 4) * a1 * a1 * a1 * a3, "a1") ==
        two * a1 * a2 * a2 - cst(vs, 12) * a1 * a1 * a3);
  CHECK_THROWS_AS(derivative(x, "z"), UsageError);
}

TEST_CASE("specialize examples", "[polyring]") {
  auto vs = family_vars(3);
  auto a1 = var(vs, "a1"), a2 = var(vs, "a2"), a3 = var(vs, "a3");
  auto d3 = classical_cubic_disc(vs);

  auto at_zero = specialize(d3, {{vs->index("a0"), Integer(0)}});
  CHECK(at_zero == a1 * a1 * (a2 * a2 - cst(vs, 4) * a1 * a3));
  CHECK(specialize(d3, {}) == d3);

  auto q = a1 * a1 - cst(vs, 4) * var(vs, "a0") * a2;
  auto v = specialize(q, {{vs->index("a0"), Integer(1)},
                          {vs->index("a1"), Integer(2)},
                          {vs->index("a2"), Integer(1)}});
  CHECK(v.is_zero());
}

TEST_CASE("specialize substitutes polynomials", "[polyring]") {
  auto vs = xy();
  auto x = var(vs, "x"), y = var(vs, "y");
  auto p = x * x + y;
  auto r = specialize(p, {{0, Substitute{y + cst(vs, 1)}}});
  CHECK(r == y * y + cst(vs, 3) * y + cst(vs, 1));
}

TEST_CASE("exact_divide examples", "[polyring]") {
  auto vs = family_vars(3);
  auto x = var(vs, "x"), a0 = var(vs, "a0"), a1 = var(vs, "a1"), a2 = var(vs, "a2"),
       a3 = var(vs, "a3");
  auto one = cst(vs, 1);

  CHECK(exact_divide(x * x - one, x - one) == x + one);
  CHECK(exact_divide(a1 * a1 * a2 - cst(vs, 4) * a0 * a2 * a2, a2) ==
        a1 * a1 - cst(vs, 4) * a0 * a2);
  CHECK_THROWS_AS(exact_divide(x * x + one, x - one), InexactDivisionError);
  CHECK_THROWS_AS(exact_divide(x, Polynomial(vs)), UsageError);

  // DD_{3,0} by hand: the cubic discriminant is quadratic in a0, so its
  // discriminant in a0 is b^2 - 4ac.
  auto qa = cst(vs, -27) * a3 * a3;
  auto qb = cst(vs, 18) * a1 * a2 * a3 - cst(vs, 4) * a2 * a2 * a2;
  auto qc = a1 * a1 * a2 * a2 - cst(vs, 4) * a1 * a1 * a1 * a3;
  REQUIRE(qa * a0 * a0 + qb * a0 + qc == classical_cubic_disc(vs));
  auto dd30 = qb * qb - cst(vs, 4) * qa * qc;
  auto base = a2 * a2 - cst(vs, 3) * a1 * a3;
  CHECK(exact_divide(dd30, base.pow(3)) == cst(vs, 16));
  CHECK(content_primitive(dd30).content == 16);
}

TEST_CASE("content_primitive examples", "[polyring]") {
  auto vs = xy();
  auto x = var(vs, "x"), y = var(vs, "y");

  auto r = content_primitive(cst(vs, 6) * x + cst(vs, 4) * y);
  CHECK(r.content == 2);
  CHECK(r.primitive == cst(vs, 3) * x + cst(vs, 2) * y);
  CHECK(r.sign == 1);

  auto s = content_primitive(cst(vs, -2) * x * x);
  CHECK(s.content == 2);
  CHECK(s.primitive == x * x);
  CHECK(s.sign == -1);

  auto z = content_primitive(Polynomial(vs));
  CHECK(z.content == 0);
  CHECK(z.sign == 1);
  CHECK(z.primitive.is_zero());
}

TEST_CASE("sqrt_exact examples", "[polyring]") {
  auto vs = xy();
  auto x = var(vs, "x"), y = var(vs, "y");
  CHECK(sqrt_exact((x + y) * (x + y)) == x + y);
  CHECK(sqrt_exact(cst(vs, 4) * x * x) == cst(vs, 2) * x);
  CHECK_THROWS_AS(sqrt_exact(x * x + cst(vs, 1)), NotASquareError);
  CHECK_THROWS_AS(sqrt_exact(cst(vs, -4) * x * x), NotASquareError);
  CHECK_THROWS_AS(sqrt_exact(cst(vs, 2)), NotASquareError);
  auto mixed = x * x * y - cst(vs, 3) * y * y + x;
  CHECK(sqrt_exact(mixed * mixed) == (mixed.leading_coefficient() > 0 ? mixed : -mixed));
}

TEST_CASE("degrees examples", "[polyring]") {
  auto vs = family_vars(3);
  auto d3 = classical_cubic_disc(vs);
  auto d = degrees(d3);
  CHECK(d.total == 4);
  CHECK(d.weighted == 6);
  CHECK(d.homogeneous);
  CHECK(d.quasi_homogeneous);
  CHECK(d.per_variable == std::vector<int>{0, 2, 3, 3, 2});

  auto lin = var(vs, "x") + cst(vs, 1);
  CHECK_FALSE(degrees(lin).homogeneous);

  auto z = degrees(Polynomial(vs));
  CHECK(z.is_zero);
  CHECK(z.total == kMinusInfinity);
  CHECK(z.per_variable[0] == kMinusInfinity);
}

TEST_CASE("ring axioms on random polynomials", "[polyring][property]") {
  std::mt19937_64 rng(20261016);
  auto vs = make_varset({"x", "y", "z"});
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = random_poly(rng, vs, 3, 4, 3, 9);
    auto q = random_poly(rng, vs, 3, 4, 3, 9);
    auto r = random_poly(rng, vs, 3, 4, 3, 9);
    REQUIRE((p + q) + r == p + (q + r));
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p + q == q + p);
    REQUIRE(p * q == q * p);
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE((p - p).is_zero());
  }
}

TEST_CASE("division, content and sqrt round trips", "[polyring][property]") {
  std::mt19937_64 rng(7);
  auto vs = make_varset({"x", "y", "z"});
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng, vs, 3, 5, 3, 20);
    auto q = random_poly(rng, vs, 3, 4, 3, 20);
    if (!q.is_zero()) REQUIRE(exact_divide(p * q, q) == p);

    auto cp = content_primitive(p);
    REQUIRE(Integer(cp.sign * cp.content) * cp.primitive == p);
    if (!p.is_zero()) {
      REQUIRE(content(cp.primitive) == 1);
      REQUIRE(cp.primitive.leading_coefficient() > 0);
      auto root = sqrt_exact(p * p);
      REQUIRE(root * root == p * p);
      REQUIRE((root == p || root == -p));
      REQUIRE(root.leading_coefficient() > 0);
    }
  }
}

TEST_CASE("total degree never increases under integer specialization", "[polyring][property]") {
  std::mt19937_64 rng(11);
  auto vs = make_varset({"x", "y", "z"});
  std::uniform_int_distribution<long> val(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng, vs, 3, 6, 4, 9);
    if (p.is_zero()) continue;
    auto s = specialize(p, {{1, Integer(val(rng))}});
    if (s.is_zero()) continue;
    REQUIRE(degrees(s).total <= degrees(p).total);
    REQUIRE(degree_in(s, 1) == 0);
  }
}

TEST_CASE("text format round trip", "[polyring][io]") {
  auto vs = family_vars(3);
  auto d3 = classical_cubic_disc(vs);
  auto text = serialize(d3);
  CHECK(text.rfind("vars: x,a0,a1,a2,a3\n", 0) == 0);
  CHECK(parse_polynomial(text) == d3);
  CHECK(serialize(parse_polynomial(text)) == text);

  auto zero = parse_polynomial("vars: x,a0\n");
  CHECK(zero.is_zero());
  CHECK(serialize(zero) == "vars: x,a0\n");

  auto custom = make_varset({"u", "v"}, {3, 5});
  auto p = Polynomial::variable(custom, 0) + Polynomial::constant(custom, 2);
  CHECK(parse_polynomial(serialize(p)) == p);
}

TEST_CASE("text format parse errors carry line numbers", "[polyring][io]") {
  try {
    parse_polynomial("vars: x,y\n1 : 1,0\n2 : 1,0\n");
    FAIL("duplicate monomial accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_polynomial("vars: x,y\n1 : 1,0\nbogus\n");
    FAIL("malformed line accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_polynomial("1 : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("vars: x\n0 : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("vars: x\n1 : 1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("vars: x\n1x : 1\n"), ParseError);
}
