#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include <ddisc/critical_values.hpp>
#include <ddisc/double_disc.hpp>

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

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ddisc_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("generic_disc examples", "[doubledisc]") {
  CHECK(generic_disc(2) == a(2, 1) * a(2, 1) - c(2, 4) * a(2, 0) * a(2, 2));
  CHECK(generic_disc(3) == classical_cubic_disc(coefficient_vars(3)));
  auto d4 = degrees(generic_disc(4));
  CHECK(d4.total == 6);
  CHECK(d4.weighted == 12);
  CHECK(d4.homogeneous);
  CHECK(d4.quasi_homogeneous);
  CHECK_THROWS_AS(generic_disc(1), UsageError);
}

TEST_CASE("generic_disc matches the root-product law", "[doubledisc][property]") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> root(-7, 7);
  for (int n = 2; n <= 5; ++n) {
    auto d = generic_disc(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> r(n);
      for (auto& v : r) v = root(rng);
      // Coefficients of prod (x - r_i).
      std::vector<Integer> coef{Integer(1)};
      for (long ri : r) {
        std::vector<Integer> next(coef.size() + 1, Integer(0));
        for (std::size_t j = 0; j < coef.size(); ++j) {
          next[j + 1] += coef[j];
          next[j] -= coef[j] * ri;
        }
        coef = next;
      }
      Integer expect = 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) expect *= Integer((r[i] - r[j]) * (r[i] - r[j]));
      REQUIRE(d.evaluate(coef) == expect);
    }
  }
}

TEST_CASE("discriminant degree, symmetry and leading term", "[doubledisc][property]") {
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    auto d = generic_disc(n);
    auto dg = degrees(d);
    CHECK(dg.homogeneous);
    CHECK(dg.quasi_homogeneous);
    CHECK(dg.total == 2 * n - 2);
    CHECK(dg.weighted == n * (n - 1));
    CHECK(reverse_coefficients(d, n) == d);
    for (int k = 0; k <= n; ++k) CHECK(UniView::of(d, k).degree() == disc_degree_in(n, k));
    auto lead = UniView::of(d, 0).leading();
    Integer sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(lead == Polynomial::constant(d.varset(), sign * pow_int(Integer(n), n)) *
                      a(n, n).pow(static_cast<unsigned>(n - 1)));
  }
}

TEST_CASE("double_disc examples", "[doubledisc]") {
  auto dd30 = double_disc(3, 0, no_cache());
  auto base = a(3, 2) * a(3, 2) - c(3, 3) * a(3, 1) * a(3, 3);
  CHECK(dd30 == c(3, 16) * base.pow(3));

  auto dd41 = double_disc(4, 1, no_cache());
  CHECK(content(dd41) == 256);
  CHECK_NOTHROW(exact_divide(dd41, a(4, 0)));

  CHECK_THROWS_AS(double_disc(2, 0, no_cache()), UsageError);
  CHECK_THROWS_AS(double_disc(4, 5, no_cache()), UsageError);
  CHECK_THROWS_AS(double_disc(4, -1, no_cache()), UsageError);
}

TEST_CASE("double discriminant degree formulas", "[doubledisc][property]") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n, k);
      auto dd = double_disc(n, k, no_cache());
      CHECK(dd_degree_violation(dd, n, k).empty());
      auto want = expected_dd_degrees(n, k);
      CHECK(degrees(dd).total == want.total);
      CHECK(degrees(dd).weighted == want.weighted);
    }
  CHECK(expected_dd_degrees(4, 0).total == 18);
  CHECK(expected_dd_degrees(4, 0).weighted == 48);
}

TEST_CASE("direct and interpolated double discriminants agree", "[doubledisc]") {
  auto direct = no_cache();
  direct.strategy = Strategy::direct;
  for (int k = 0; k <= 4; ++k)
    CHECK(double_disc(4, k, direct) == double_disc(4, k, no_cache()));
  CHECK(double_disc(5, 2, direct) == double_disc(5, 2, no_cache()));
}

TEST_CASE("coefficient reversal", "[doubledisc]") {
  CHECK(reversal_check(3, 1, no_cache()));
  CHECK(reversal_check(4, 2, no_cache()));
  CHECK(reversal_check(5, 2, no_cache()));
  CHECK(reversal_check(5, 0, no_cache()));
  CHECK(reversal_check_sampled(6, 2, 30, 7));
  CHECK(reversal_check_sampled(7, 3, 30, 7));
  // A non-identity renaming must not pass: DD_{4,1} is not self-reversed.
  CHECK_FALSE(reversal_check(double_disc(4, 1, no_cache()), double_disc(4, 1, no_cache()), 4));
}

TEST_CASE("numeric evaluator and specializations match symbolic DD", "[doubledisc][property]") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto dd = double_disc(n, k, no_cache());
      DoubleDiscEvaluator ev(n, k);
      std::vector<Integer> pt(n + 1);
      for (int t = 0; t < 20; ++t) {
        for (auto& v : pt) v = dist(rng);
        // Exercise vanishing top coefficients too.
        if (t % 5 == 0) pt[n] = 0;
        if (t % 10 == 0 && n - 1 != k) pt[n - 1] = 0;
        pt[k] = 0;
        REQUIRE(ev(pt) == dd.evaluate(pt));
      }
      // One symbolic companion per (n,k), a_k plus one other variable kept.
      std::vector<std::optional<Integer>> fixed(n + 1);
      int keep = (k + 1) % (n + 1);
      Assignment asg;
      for (int i = 0; i <= n; ++i)
        if (i != k && i != keep) {
          fixed[i] = Integer(dist(rng) % 4);
          asg.emplace(static_cast<std::size_t>(i), Substitute{*fixed[i]});
        }
      REQUIRE(specialized_double_disc(n, k, fixed) == specialize(dd, asg));
    }
}

TEST_CASE("disk cache round trip and corruption handling", "[doubledisc]") {
  TempDir dir;
  DoubleDiscOptions opt;
  opt.cache_dir = dir.path.string();
  auto first = double_disc_ex(4, 1, opt);
  CHECK(first.source == DdSource::computed);
  CHECK(std::filesystem::exists(dir.path / dd_cache_name(4, 1)));
  auto second = double_disc_ex(4, 1, opt);
  CHECK(second.source == DdSource::cache);
  CHECK(second.dd == first.dd);
  for (auto& e : std::filesystem::directory_iterator(dir.path))
    CHECK(e.path().extension() == ".poly");

  // A wrong but well-formed polynomial is rejected and replaced.
  {
    std::ofstream out(dir.path / dd_cache_name(4, 1), std::ios::trunc);
    out << serialize(double_disc(4, 2, no_cache()));
  }
  auto third = double_disc_ex(4, 1, opt);
  CHECK(third.source == DdSource::recomputed_after_corruption);
  CHECK_FALSE(third.corruption.empty());
  CHECK(third.dd == first.dd);
  CHECK(double_disc_ex(4, 1, opt).source == DdSource::cache);

  // So is garbage.
  {
    std::ofstream out(dir.path / dd_cache_name(4, 1), std::ios::trunc);
    out << "vars: a0,a1\n3 : 1\n";
  }
  auto fourth = double_disc_ex(4, 1, opt);
  CHECK(fourth.source == DdSource::recomputed_after_corruption);
  CHECK(fourth.dd == first.dd);
}

TEST_CASE("critical_value_poly examples", "[doubledisc]") {
  auto vs = make_varset({"x", "p", "q", "z"});
  auto x = var(vs, "x"), p = var(vs, "p"), q = var(vs, "q"), z = var(vs, "z");
  auto g = critical_value_poly(UniView::of(x.pow(3) + p * x + q, "x"), vs->index("z"));
  CHECK(g == cst(vs, 27) * (z - q) * (z - q) + cst(vs, 4) * p.pow(3));

  auto vq = make_varset({"x", "a0", "z"});
  auto g2 = critical_value_poly(UniView::of(var(vq, "x").pow(2) + var(vq, "a0"), "x"),
                                vq->index("z"));
  CHECK(g2 == cst(vq, 4) * (var(vq, "z") - var(vq, "a0")));

  // f'(0) = 0, so z - f(0) divides g.
  auto vr = make_varset({"x", "z"});
  auto X = var(vr, "x"), Z = var(vr, "z");
  auto f = X.pow(4) - cst(vr, 3) * X * X + cst(vr, 5);
  auto g3 = critical_value_poly(UniView::of(f, "x"), vr->index("z"));
  CHECK_NOTHROW(exact_divide(g3, Z - cst(vr, 5)));

  // The resultant view of g at integer coefficients agrees with the symbolic one.
  auto fam = GenericFamily::make(4, {"z"});
  auto gs = critical_value_poly(UniView::of(fam.f, 0), fam.varset->index("z"));
  std::vector<Integer> coeffs{3, -1, 4, 1, -5};
  std::vector<Integer> pt(fam.varset->size(), Integer(0));
  for (int i = 0; i <= 4; ++i) pt[fam.a(i)] = coeffs[i];
  auto gz = coefficients_in(specialize(gs, {{fam.a(0), Integer(3)}, {fam.a(1), Integer(-1)},
                                            {fam.a(2), Integer(4)}, {fam.a(3), Integer(1)},
                                            {fam.a(4), Integer(-5)}}),
                            fam.varset->index("z"));
  auto gn = critical_value_poly_at(coeffs);
  REQUIRE(gz.size() == gn.size());
  for (std::size_t j = 0; j < gn.size(); ++j) CHECK(gz[j].constant_value() == gn[j]);
}

TEST_CASE("critical-value oracle reproduces DD_{n,0}", "[doubledisc]") {
  // n = 3 specialized by hand: a3 = 1, a2 = 0, a1 = p gives -432 p^3.
  for (long pv : {-3L, -1L, 2L, 5L}) {
    std::vector<Integer> pt{Integer(7), Integer(pv), Integer(0), Integer(1)};
    CHECK(dd0_oracle_at(pt) == Integer(-432) * pv * pv * pv);
    CHECK(double_disc(3, 0, no_cache()).evaluate(pt) == Integer(-432) * pv * pv * pv);
  }
  for (int n = 3; n <= 4; ++n) {
    auto oracle = dd0_via_oracle(n);
    auto dd = double_disc(n, 0, no_cache());
    auto s = oracle_sign(oracle, dd);
    REQUIRE(s.has_value());
    CHECK(*s == 1);
  }
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<long> dist(-50, 50);
  auto dd5 = double_disc(5, 0, no_cache());
  std::vector<Integer> pt(6);
  for (int t = 0; t < 100; ++t) {
    for (auto& v : pt) v = dist(rng);
    if (pt[5] == 0) pt[5] = 1;
    REQUIRE(dd0_oracle_at(pt) == dd5.evaluate(pt));
  }
}
