#include <catch_amalgamated.hpp>

#include <random>

#include <ddisc/checks.hpp>
#include <ddisc/content.hpp>
#include <ddisc/factorization.hpp>

#include "test_support.hpp"

using namespace ddisc;
using namespace ddisc::testing;

namespace {

DoubleDiscOptions no_cache() {
  DoubleDiscOptions o;
  o.use_env_cache = false;
  return o;
}

Polynomial a(int n, int i) { return Polynomial::variable(coefficient_vars(n), coeff_name(i)); }
Polynomial c(int n, long v) { return Polynomial::constant(coefficient_vars(n), v); }

std::vector<Integer> coeffs(std::initializer_list<long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

const CheckRecord& find(const Report& r, const std::string& id) {
  for (const auto& rec : r.records)
    if (rec.id == id) return rec;
  FAIL("missing record " << id);
  return r.records.front();
}

}  // namespace

TEST_CASE("upoly squarefree decomposition", "[analysis]") {
  // (t-1)^3 (t+2)^2 (t^2+1) * 6
  UPoly p{Integer(6)};
  for (int i = 0; i < 3; ++i) p = umul(p, {Integer(-1), Integer(1)});
  for (int i = 0; i < 2; ++i) p = umul(p, {Integer(2), Integer(1)});
  p = umul(p, {Integer(1), Integer(0), Integer(1)});
  auto sq = squarefree_decomposition(p);
  CHECK(sq.unit == 6);
  REQUIRE(sq.parts.size() == 3);
  CHECK(sq.parts[0] == UPoly{Integer(1), Integer(0), Integer(1)});
  CHECK(sq.parts[1] == UPoly{Integer(2), Integer(1)});
  CHECK(sq.parts[2] == UPoly{Integer(-1), Integer(1)});
  CHECK(order_at_zero(umul(p, {Integer(0), Integer(0), Integer(1)})) == 2);
  CHECK_THROWS_AS(udivexact({Integer(1), Integer(0), Integer(1)}, {Integer(1), Integer(1)}),
                  InexactDivisionError);
}

TEST_CASE("squarefree decomposition reassembles", "[analysis][property]") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    UPoly p{Integer(d(rng) == 0 ? 1 : d(rng) + 5)};
    for (int f = 0; f < 3; ++f) {
      UPoly lin{Integer(d(rng)), Integer(1 + (trial + f) % 2)};
      int m = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < m; ++i) p = umul(p, lin);
    }
    auto sq = squarefree_decomposition(p);
    UPoly back{sq.unit};
    for (std::size_t i = 0; i < sq.parts.size(); ++i)
      for (std::size_t e = 0; e <= i; ++e) back = umul(back, sq.parts[i]);
    REQUIRE(back == p);
    for (std::size_t i = 0; i < sq.parts.size(); ++i)
      for (std::size_t j = i + 1; j < sq.parts.size(); ++j)
        REQUIRE(udeg(ugcd(sq.parts[i], sq.parts[j])) <= 0);
  }
}

TEST_CASE("factor_dd0 for small n", "[analysis]") {
  auto f3 = factor_dd0(3, no_cache());
  CHECK(f3.verified);
  CHECK(f3.A == a(3, 2) * a(3, 2) - c(3, 3) * a(3, 1) * a(3, 3));
  CHECK(f3.B == c(3, 1));
  CHECK(abs(f3.c) == 16);
  auto f4 = factor_dd0(4, no_cache());
  CHECK(f4.verified);
  CHECK(abs(f4.c) == 16);
  CHECK(degrees(f4.A).total == 4);
  CHECK(degrees(f4.B).total == 3);
}

TEST_CASE("factor_dd0 rejects a non-DD input", "[analysis]") {
  auto dd = double_disc(3, 0, no_cache());
  CHECK_THROWS_AS(factor_dd0(3, dd * a(3, 1)), FalsificationError);
}

TEST_CASE("critical-point formula for B_{n,0} is a constant multiple", "[analysis]") {
  for (int n = 3; n <= 4; ++n) {
    auto f = factor_dd0(n, no_cache());
    auto r = b_formula_check(n, f.B, 30, 7);
    CHECK(r.consistent);
    REQUIRE(r.ratio);
    CHECK(r.trials_run + r.trials_skipped == 30);
    CHECK(r.trials_run >= 15);
  }
  // A wrong B is caught.
  auto f4 = factor_dd0(4, no_cache());
  auto bad = b_formula_check(4, f4.B + a(4, 0) * a(4, 4) * a(4, 4), 30, 7);
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("roots expression for B_{4,0}", "[analysis]") {
  auto f4 = factor_dd0(4, no_cache());
  auto r = roots_expression_check(f4.B, 50, 3);
  INFO(r.detail);
  CHECK(r.consistent);
  CHECK(r.ratio);
  CHECK(r.agree > 40);
}

TEST_CASE("content records and the 2-adic report", "[analysis]") {
  auto dd41 = double_disc(4, 1, no_cache());
  auto ex = content_exact(4, 1, dd41);
  CHECK(ex.value.value() == 256);
  auto rep = divisibility_report(ex, 100, 9);
  CHECK(find(rep, "prop.two_power").verdict == Verdict::pass);
  CHECK(find(rep, "prop.two_power.sampled").verdict == Verdict::pass);
  CHECK(find(rep, "conj.prime_support").verdict == Verdict::consistent);
  CHECK(find(rep, "conj.nu2").verdict == Verdict::consistent);
  CHECK(find(rep, "conj.nu_p_multiple").verdict == Verdict::consistent);
  CHECK_FALSE(rep.any_failure());

  // Injected counterexamples flip the verdicts.
  ContentRecord fake = ex;
  fake.value = factor_by_trial_division(Integer(8), 100);
  auto bad = divisibility_report(fake);
  CHECK(find(bad, "prop.two_power").verdict == Verdict::fail);
  CHECK(find(bad, "conj.nu2").verdict == Verdict::inconsistent);
  CHECK(find(bad, "conj.nu_p_multiple").verdict == Verdict::inconsistent);
  fake.value = factor_by_trial_division(Integer(256 * 9), 100);
  auto bad3 = divisibility_report(fake);
  CHECK(find(bad3, "conj.prime_support").verdict == Verdict::inconsistent);

  auto lb = content_lower_bound(6, 3);
  CHECK(lb.value.value() == 64);
  CHECK(divisibility_report(lb).records.empty());
}

TEST_CASE("upper bounds contain the exact content", "[analysis][property]") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto dd = double_disc(n, k, no_cache());
      auto ex = content_exact(n, k, dd);
      auto ub = content_upper_bound(n, k, 11);
      REQUIRE_FALSE(ub.inconclusive);
      INFO("n=" << n << " k=" << k);
      CHECK(divides(ex.value.value(), ub.value.value()));
      CHECK(divides(content_lower_bound(n, k).value.value(), ex.value.value()));
    }
}

TEST_CASE("content table for n <= 5", "[analysis]") {
  const long want[3][3] = {{16, 16, 0}, {16, 256, 256}, {256, 256, 256}};
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(content_exact(n, k, no_cache()).value.value() == want[n - 3][k]);
    }
}

TEST_CASE("vanishing loci", "[analysis]") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto dd = double_disc(n, k, no_cache());
      VanishingOptions opt;
      opt.dd = &dd;
      opt.trials = 30;
      auto rep = vanishing_checks(n, k, opt);
      INFO("n=" << n << " k=" << k);
      for (const auto& r : rep.records) {
        INFO(r.id << ": " << r.detail);
        CHECK(r.verdict == Verdict::pass);
      }
      if (k == 1) CHECK(rep.records.size() >= 2);
    }
}

TEST_CASE("vanishing check detects a non-vanishing family", "[analysis]") {
  // DD_{4,0} does not vanish on a0 = 0: the a0-divisibility claim is k=1 only.
  DoubleDiscEvaluator ev(4, 0);
  std::mt19937_64 rng(1);
  int nonzero = 0;
  for (int t = 0; t < 20; ++t) {
    auto pt = random_point(rng, 4);
    pt[0] = 0;
    nonzero += ev(pt) != 0;
  }
  CHECK(nonzero > 0);
}

TEST_CASE("witness polynomials separate A and B", "[analysis]") {
  auto triple = coeffs({-2, -5, -3, 1, 1});  // (x - 2)(x + 1)^3
  auto dbl = coeffs({1, 0, -2, 0, 1});       // (x - 1)^2 (x + 1)^2
  for (int k = 0; k <= 4; ++k) {
    INFO("k=" << k);
    auto t = classify_zero(4, k, triple, 17);
    CHECK(t.dd_zero);
    CHECK(t.factor == "A");
    auto d = classify_zero(4, k, dbl, 17);
    CHECK(d.dd_zero);
    CHECK(d.factor == "B");
  }
  auto f4 = factor_dd0(4, no_cache());
  CHECK(f4.A.evaluate(triple) == 0);
  CHECK(f4.B.evaluate(triple) != 0);
  CHECK(f4.B.evaluate(dbl) == 0);
  CHECK(f4.A.evaluate(dbl) != 0);
}

TEST_CASE("B_{4,2} locus gives a double zero", "[analysis]") {
  // r1 r2 = r3 r4: roots 1, 6, 2, 3.
  UPoly f{Integer(1)};
  for (long r : {1, 6, 2, 3}) f = umul(f, {Integer(-r), Integer(1)});
  auto w = classify_zero(4, 2, f, 3);
  CHECK(w.dd_zero);
  CHECK(w.order == 2);
}

TEST_CASE("structure probe finds no simple factors", "[analysis]") {
  for (auto [n, k] : {std::pair{4, 1}, {4, 2}, {5, 1}, {5, 2}}) {
    auto r = structure_probe(n, k, 6, 21);
    INFO("n=" << n << " k=" << k);
    CHECK(r.all_consistent());
    CHECK(r.max_part_degree[1] == 0);
  }
  CHECK_THROWS_AS(structure_probe(4, 0, 1, 1), UsageError);
}

TEST_CASE("factor names from vanishing orders", "[analysis]") {
  CHECK(factor_from_order(2) == "B");
  CHECK(factor_from_order(3) == "A");
  CHECK(factor_from_order(4) == "B");
  CHECK(factor_from_order(5) == "A,B");
  CHECK(factor_from_order(6) == "?");
  CHECK(factor_from_order(1) == "?");
  CHECK(factor_from_order(0) == "?");
}

TEST_CASE("witness and probe reports", "[analysis]") {
  auto f4 = factor_dd0(4, no_cache());
  auto rep = witness_report(5, &f4);
  CHECK(rep.records.size() == 12);
  CHECK_FALSE(rep.any_failure());
  auto pr = probe_record(structure_probe(4, 1, 10, 2), 2);
  CHECK(pr.verdict == Verdict::consistent);
  CHECK(pr.to_json()["witness"]["free_variable"] == "a0");
}

TEST_CASE("sampled reports do not depend on thread count", "[analysis][property]") {
  auto lb = content_lower_bound(5, 2);
  lb.kind = ContentKind::exact;
  lb.value = factor_by_trial_division(Integer(256), 100);
  auto one = divisibility_report(lb, 40, 3, 1);
  auto four = divisibility_report(lb, 40, 3, 4);
  REQUIRE(one.records.size() == four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i)
    CHECK(one.records[i].to_json().dump() == four.records[i].to_json().dump());
  CHECK(probe_record(structure_probe(5, 2, 12, 8, 1), 8).to_json().dump() ==
        probe_record(structure_probe(5, 2, 12, 8, 3), 8).to_json().dump());
}
