#ifndef DDISC_CHECKS_HPP
#define DDISC_CHECKS_HPP

#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "content.hpp"
#include "critical_values.hpp"
#include "double_disc.hpp"
#include "factorization.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "upoly.hpp"

namespace ddisc {

inline constexpr long kSampleRange = 50;

inline Json content_json(const ContentRecord& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"kind", to_string(r.kind)},
              {"value", r.value.to_string()},
              {"method", r.method},
              {"runs", r.runs},
              {"degenerate_runs", r.degenerate_runs},
              {"inconclusive", r.inconclusive}};
}

inline std::set<unsigned long> prime_support(const ContentRecord& r) {
  std::set<unsigned long> s;
  for (const auto& [p, e] : r.value.factors) s.insert(p);
  return s;
}

inline std::set<unsigned long> primes_of(unsigned long m) {
  std::set<unsigned long> s;
  for (unsigned long p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      s.insert(p);
      m /= p;
    }
  if (m > 1) s.insert(m);
  return s;
}

// Random point in [-50, 50]^{n+1} for DD_{n,k} (entry k is irrelevant).
inline std::vector<Integer> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(-kSampleRange, kSampleRange);
  std::vector<Integer> pt(n + 1);
  for (auto& v : pt) v = d(rng);
  return pt;
}

// 2^{n-1} | DD_{n,k}, and 2^n | DD_{n,k} when 1 <= k <= n/2, together with
// the three clauses of the conjectured shape of c_{n,k}. Theorem clauses use
// PASS/FAIL, conjecture clauses CONSISTENT/INCONSISTENT/UNDECIDED.
inline Report divisibility_report(const ContentRecord& rec, unsigned sampled_trials = 0,
                                  std::uint64_t seed = 0, unsigned threads = 1) {
  Report rep;
  const int n = rec.n, k = rec.k;
  const bool middle = k >= 1 && 2 * k <= n;
  const unsigned need = middle ? n : n - 1;
  const bool exact = rec.kind == ContentKind::exact;
  const bool bound = rec.kind == ContentKind::upper_bound;
  Json in{{"n", n}, {"k", k}, {"content", content_json(rec)}};

  if (rec.kind != ContentKind::lower_bound && !rec.inconclusive) {
    unsigned v2 = record_valuation(rec, 2);
    auto r = CheckRecord::make("prop.two_power", in);
    r.witness = {{"nu2", v2}, {"required", need}};
    if (v2 < need) {
      r.verdict = Verdict::fail;
      r.detail = "nu2 = " + std::to_string(v2) + " < " + std::to_string(need);
    } else if (exact) {
      r.verdict = Verdict::pass;
      r.detail = "nu2 = " + std::to_string(v2) + " >= " + std::to_string(need);
    } else {
      r.verdict = Verdict::undecided;
      r.detail = "upper bound leaves room: c may have nu2 below the bound's";
    }
    rep.add(std::move(r));
  }

  if (sampled_trials > 0) {
    DoubleDiscEvaluator ev(n, k);
    std::mt19937_64 rng(seed);
    Integer mod = pow_int(Integer(2), need);
    std::vector<std::vector<Integer>> pts;
    for (unsigned t = 0; t < sampled_trials; ++t) pts.push_back(random_point(rng, n));
    std::vector<Integer> vals(sampled_trials);
    parallel_for(sampled_trials, threads, [&](std::size_t t) { vals[t] = ev(pts[t]); });
    unsigned bad = 0, zeros = 0;
    Json first_bad;
    for (unsigned t = 0; t < sampled_trials; ++t) {
      if (vals[t] == 0) ++zeros;
      if (!divides(mod, vals[t]) && bad++ == 0) {
        first_bad = Json::array();
        for (auto& x : pts[t]) first_bad.push_back(x.get_str());
      }
    }
    auto r = CheckRecord::make("prop.two_power.sampled", in);
    r.seed = seed;
    r.verdict = bad ? Verdict::fail : Verdict::pass;
    r.detail = std::to_string(sampled_trials - bad) + "/" + std::to_string(sampled_trials) +
               " values divisible by 2^" + std::to_string(need) + " (" + std::to_string(zeros) +
               " zero)";
    r.witness = {{"trials", sampled_trials}, {"failures", bad}};
    if (bad) r.witness["first_failure"] = first_bad;
    rep.add(std::move(r));
  }

  if (rec.kind == ContentKind::lower_bound || rec.inconclusive) return rep;

  // (a) prime support.
  {
    auto r = CheckRecord::make("conj.prime_support", in);
    auto have = prime_support(rec);
    if (rec.value.cofactor != 1) {
      r.verdict = Verdict::undecided;
      r.detail = "unfactored cofactor";
    } else if (k > 0) {
      auto want = primes_of(2ul * std::gcd(static_cast<unsigned long>(k), static_cast<unsigned long>(n)));
      bool missing = false, extra = false;
      for (auto p : want) missing |= !have.count(p);
      for (auto p : have) extra |= !want.count(p);
      if (missing)
        r.verdict = Verdict::inconsistent;
      else if (!extra)
        r.verdict = Verdict::consistent;
      else
        r.verdict = exact ? Verdict::inconsistent : Verdict::undecided;
      std::string w;
      for (auto p : want) w += (w.empty() ? "" : ",") + std::to_string(p);
      r.detail = "required primes {" + w + "}, found " + rec.value.to_string();
    } else {
      unsigned e = 4 * ((n - 1) / 2);
      bool pure = have.size() == 1 && have.count(2);
      unsigned v2 = record_valuation(rec, 2);
      if (exact)
        r.verdict = (pure && v2 == e) ? Verdict::consistent : Verdict::inconsistent;
      else if (v2 < e)
        r.verdict = Verdict::inconsistent;
      else
        r.verdict = (pure && v2 == e) ? Verdict::consistent : Verdict::undecided;
      r.detail = "expected 2^" + std::to_string(e) + ", found " + rec.value.to_string();
    }
    rep.add(std::move(r));
  }
  // (b) nu2 lower bound, with equality at k = 0.
  {
    auto r = CheckRecord::make("conj.nu2", in);
    unsigned e = 4 * ((n - 1) / 2), v2 = record_valuation(rec, 2);
    r.witness = {{"nu2", v2}, {"conjectured_min", e}};
    if (v2 < e)
      r.verdict = Verdict::inconsistent;
    else if (k == 0 && v2 != e)
      r.verdict = exact ? Verdict::inconsistent : Verdict::undecided;
    else
      r.verdict = Verdict::consistent;
    r.detail = "nu2 = " + std::to_string(v2) + ", conjectured >= " + std::to_string(e) +
               (k == 0 ? " with equality" : "");
    rep.add(std::move(r));
  }
  // (c) nu_p a multiple of 2p.
  {
    auto r = CheckRecord::make("conj.nu_p_multiple", in);
    bool ok = true;
    std::string d;
    for (const auto& [p, e] : rec.value.factors) {
      bool m = e % (2 * p) == 0;
      ok &= m;
      d += (d.empty() ? "" : ", ") + ("nu" + std::to_string(p)) + "=" + std::to_string(e) +
           (m ? "" : " (not a multiple of " + std::to_string(2 * p) + ")");
    }
    if (rec.value.cofactor != 1) {
      r.verdict = Verdict::undecided;
      d += " plus unfactored cofactor";
    } else if (ok) {
      r.verdict = Verdict::consistent;
    } else {
      r.verdict = bound ? Verdict::undecided : Verdict::inconsistent;
    }
    r.detail = d.empty() ? "c = 1" : d;
    rep.add(std::move(r));
  }
  return rep;
}

// Coefficients of t -> DD_{n,k}(p + t v), recovered from deg+1 samples.
inline UPoly dd_on_line(const DoubleDiscEvaluator& ev, const std::vector<Integer>& p,
                        const std::vector<Integer>& v) {
  auto deg = expected_dd_degrees(ev.n(), ev.k()).total;
  std::vector<Integer> samples(static_cast<std::size_t>(deg) + 1), pt(p.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    long t = interpolation_node(i);
    for (std::size_t j = 0; j < p.size(); ++j) pt[j] = p[j] + v[j] * t;
    samples[i] = ev(pt);
  }
  std::vector<Integer*> line;
  for (auto& s : samples) line.push_back(&s);
  std::vector<Integer> scratch;
  newton_to_monomial(line, scratch);
  trim(samples);
  return samples;
}

struct VanishingOptions {
  unsigned trials = 100;
  std::uint64_t seed = 0xd15c;
  const Polynomial* dd = nullptr;  // symbolic DD_{n,k} when available
};

// a0 | DD_{n,1}; DD_{n,k}(a0 = a1 = 0) = 0 for 2 <= k <= n/2; and DD = 0 on
// families with a triple root or two double roots at some value of a_k.
inline Report vanishing_checks(int n, int k, const VanishingOptions& opt = {}) {
  Report rep;
  Json in{{"n", n}, {"k", k}};
  DoubleDiscEvaluator ev(n, k);
  std::mt19937_64 rng(opt.seed);

  if (k == 1) {
    if (opt.dd) {
      auto r = CheckRecord::make("vanish.a0_divides", in);
      try {
        exact_divide(*opt.dd, Polynomial::variable(opt.dd->varset(), 0));
        r.verdict = Verdict::pass;
        r.detail = "a0 divides DD symbolically";
      } catch (const InexactDivisionError&) {
        r.verdict = Verdict::fail;
        r.detail = "a0 does not divide DD";
      }
      rep.add(std::move(r));
    }
    auto r = CheckRecord::make("vanish.a0_divides.sampled", in);
    r.seed = opt.seed;
    unsigned bad = 0;
    for (unsigned t = 0; t < opt.trials; ++t) {
      auto pt = random_point(rng, n);
      pt[0] = 0;
      if (ev(pt) != 0) ++bad;
    }
    r.verdict = bad ? Verdict::fail : Verdict::pass;
    r.detail = std::to_string(opt.trials - bad) + "/" + std::to_string(opt.trials) +
               " points with a0 = 0 give DD = 0";
    rep.add(std::move(r));
  }

  if (k >= 2 && 2 * k <= n) {
    if (opt.dd) {
      auto r = CheckRecord::make("vanish.a0_a1_zero", in);
      auto s = specialize(*opt.dd, {{0, Integer(0)}, {1, Integer(0)}});
      r.verdict = s.is_zero() ? Verdict::pass : Verdict::fail;
      r.detail = s.is_zero() ? "DD(a0=a1=0) is identically zero"
                             : "DD(a0=a1=0) has " + std::to_string(s.size()) + " terms";
      rep.add(std::move(r));
    }
    auto r = CheckRecord::make("vanish.a0_a1_zero.sampled", in);
    r.seed = opt.seed;
    unsigned bad = 0;
    for (unsigned t = 0; t < opt.trials; ++t) {
      auto pt = random_point(rng, n);
      pt[0] = 0;
      pt[1] = 0;
      if (ev(pt) != 0) ++bad;
    }
    r.verdict = bad ? Verdict::fail : Verdict::pass;
    r.detail = std::to_string(opt.trials - bad) + "/" + std::to_string(opt.trials) +
               " points with a0 = a1 = 0 give DD = 0";
    rep.add(std::move(r));
  }

  // f = (x - r)^3 g or (x - r)^2 (x - s)^2 g with random integer data.
  for (int shape = 0; shape < 2; ++shape) {
    if (shape == 1 && n < 4) continue;
    auto r = CheckRecord::make(shape == 0 ? "vanish.triple_root" : "vanish.two_double_roots", in);
    r.seed = opt.seed;
    std::uniform_int_distribution<long> rd(-5, 5), cd(-9, 9);
    unsigned bad = 0;
    for (unsigned t = 0; t < opt.trials; ++t) {
      UPoly f{Integer(1)};
      auto mul_root = [&](long root, int times) {
        for (int i = 0; i < times; ++i) f = umul(f, UPoly{Integer(-root), Integer(1)});
      };
      if (shape == 0) {
        mul_root(rd(rng), 3);
      } else {
        long r1 = rd(rng), r2 = rd(rng);
        mul_root(r1, 2);
        mul_root(r2, 2);
      }
      UPoly g;
      for (int i = 0; i <= n - (shape == 0 ? 3 : 4); ++i) g.push_back(cd(rng));
      if (g.back() == 0) g.back() = 1;
      f = umul(f, g);
      if (ev(f) != 0) ++bad;
    }
    r.verdict = bad ? Verdict::fail : Verdict::pass;
    r.detail = std::to_string(opt.trials - bad) + "/" + std::to_string(opt.trials) +
               " constructed polynomials give DD = 0";
    rep.add(std::move(r));
  }
  return rep;
}

// Which factor vanishes at a point where DD = 0. With DD = c A^3 B^2 (times
// a0 when k = 1), the multiplicity of DD at the point is 3 mult(A) + 2 mult(B),
// and it equals the vanishing order along a generic line through the point.
// The minimum over a few random lines estimates it; the factor is named when
// every split 3a + 2b of the order agrees on which of a, b is positive.
struct WitnessOutcome {
  int order = -1;
  bool dd_zero = false;
  std::string factor;  // "A", "B", "A,B", or "?"
};

inline std::string factor_from_order(int m) {
  bool any = false, only_a = true, only_b = true, both = true;
  for (int a = 0; 3 * a <= m; ++a) {
    if ((m - 3 * a) % 2) continue;
    int b = (m - 3 * a) / 2;
    any = true;
    only_a &= a > 0 && b == 0;
    only_b &= a == 0 && b > 0;
    both &= a > 0 && b > 0;
  }
  if (!any || m <= 0) return "?";
  return only_a ? "A" : only_b ? "B" : both ? "A,B" : "?";
}

inline WitnessOutcome classify_zero(int n, int k, const std::vector<Integer>& point,
                                    std::uint64_t seed, int lines = 4) {
  DoubleDiscEvaluator ev(n, k);
  WitnessOutcome out;
  out.dd_zero = ev(point) == 0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Integer> v(point.size());
  for (int l = 0; l < lines; ++l) {
    for (auto& x : v) x = d(rng);
    v[k] = 0;
    int ord = order_at_zero(dd_on_line(ev, point, v));
    if (ord >= 0 && (out.order < 0 || ord < out.order)) out.order = ord;
  }
  int m = out.order;
  if (k == 1 && point[0] == 0 && m > 0) --m;  // the a0 factor
  out.factor = factor_from_order(m);
  return out;
}

struct ProbeTrial {
  bool skipped = false;
  bool consistent = true;
  int mult1_degree = 0;  // degree of the multiplicity-1 part, t-factor excluded
  int t_order = 0;
  std::vector<int> part_degrees;  // degree of S_i for i = 1, 2, ...
};

struct ProbeResult {
  int n = 0, k = 0;
  std::size_t free_var = 0;
  unsigned trials = 0, skipped = 0, consistent = 0;
  std::vector<ProbeTrial> details;
  std::map<int, int> max_part_degree;  // multiplicity -> max degree seen
  bool all_consistent() const { return consistent + skipped == trials && consistent > 0; }
};

// Squarefree patterns of univariate specializations of DD_{n,k}. Every
// multiplicity must be expressible as 3a + 2b (plus one for the t factor when
// the free variable is a0 and k = 1), which excludes simple factors.
inline ProbeResult structure_probe(int n, int k, unsigned trials, std::uint64_t seed,
                                   unsigned threads = 1) {
  if (k < 1 || 2 * k > n) throw UsageError("structure_probe: need 1 <= k <= n/2");
  ProbeResult res;
  res.n = n;
  res.k = k;
  res.free_var = k == 1 ? 0 : static_cast<std::size_t>(n);
  DoubleDiscEvaluator ev(n, k);
  std::mt19937_64 rng(seed);
  std::vector<ProbeTrial> out(trials);
  std::vector<std::vector<Integer>> pts;
  for (unsigned t = 0; t < trials; ++t) {
    pts.push_back(random_point(rng, n));
    pts.back()[res.free_var] = 0;
  }
  parallel_for(trials, threads, [&](std::size_t t) {
    ProbeTrial& tr = out[t];
    const auto& p = pts[t];
    std::vector<Integer> v(n + 1, Integer(0));
    v[res.free_var] = 1;
    UPoly u = dd_on_line(ev, p, v);
    if (u.empty()) {
      tr.skipped = true;
      return;
    }
    int ord = order_at_zero(u);
    tr.t_order = ord;
    UPoly rest(u.begin() + ord, u.end());
    auto sq = squarefree_decomposition(rest);
    for (std::size_t i = 0; i < sq.parts.size(); ++i) tr.part_degrees.push_back(udeg(sq.parts[i]));
    tr.mult1_degree = sq.degree_of(1);
    bool ok = tr.mult1_degree == 0;
    if (k == 1) {
      // t = a0 divides DD_{n,1}; its multiplicity is 1 + 3a + 2b != 2.
      ok &= ord >= 1 && ord != 2;
    } else {
      ok &= ord != 1;
    }
    tr.consistent = ok;
  });
  for (const auto& tr : out) {
    ++res.trials;
    if (tr.skipped) {
      ++res.skipped;
      continue;
    }
    if (tr.consistent) ++res.consistent;
    for (std::size_t i = 0; i < tr.part_degrees.size(); ++i)
      res.max_part_degree[int(i) + 1] = std::max(res.max_part_degree[int(i) + 1], tr.part_degrees[i]);
  }
  res.details = std::move(out);
  return res;
}

struct RootsExpressionResult {
  unsigned trials = 0, zero_both = 0, agree = 0;
  std::optional<Integer> ratio;  // displayed / extracted
  bool consistent = true;
  std::string detail;
};

// B_{4,0} against a4^3 (r1+r2-r3-r4)(r1+r3-r2-r4)(r1+r4-r2-r3) for
// f = a4 prod (x - r_i); B may differ from the display by a global sign.
inline RootsExpressionResult roots_expression_check(const Polynomial& B40, unsigned trials,
                                                    std::uint64_t seed) {
  RootsExpressionResult res;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> rd(-6, 6), ad(-4, 4);
  auto check = [&](const std::array<long, 4>& r, long a4) {
    UPoly f{Integer(a4)};
    for (long ri : r) f = umul(f, UPoly{Integer(-ri), Integer(1)});
    Integer b = B40.evaluate(f);
    Integer disp = pow_int(Integer(a4), 3) * Integer(r[0] + r[1] - r[2] - r[3]) *
                   Integer(r[0] + r[2] - r[1] - r[3]) * Integer(r[0] + r[3] - r[1] - r[2]);
    ++res.trials;
    if (b == 0 && disp == 0) {
      ++res.zero_both;
      return;
    }
    if (b == 0 || disp == 0 || !(disp == b || disp == -b)) {
      res.consistent = false;
      res.detail = "mismatch at roots (" + std::to_string(r[0]) + "," + std::to_string(r[1]) +
                   "," + std::to_string(r[2]) + "," + std::to_string(r[3]) +
                   "), a4=" + std::to_string(a4) + ": B=" + b.get_str() + ", display=" +
                   disp.get_str();
      return;
    }
    Integer s = disp == b ? 1 : -1;
    if (res.ratio && *res.ratio != s) {
      res.consistent = false;
      res.detail = "sign changes between trials";
      return;
    }
    res.ratio = s;
    ++res.agree;
  };
  check({0, 0, 0, 0}, 1);
  check({1, -1, 1, -1}, 1);
  check({1, 2, 3, 0}, 1);
  for (unsigned t = 0; res.consistent && t < trials; ++t) {
    long a4 = 0;
    while (a4 == 0) a4 = ad(rng);
    check({rd(rng), rd(rng), rd(rng), rd(rng)}, a4);
  }
  if (res.consistent)
    res.detail = std::to_string(res.agree) + " nonzero agreements" +
                 (res.ratio ? " with sign " + res.ratio->get_str() : std::string()) + ", " +
                 std::to_string(res.zero_both) + " both zero";
  return res;
}

inline CheckRecord probe_record(const ProbeResult& r, std::uint64_t seed) {
  auto rec = CheckRecord::make("conj.structure_probe", Json{{"n", r.n}, {"k", r.k}, {"trials", r.trials}});
  rec.seed = seed;
  std::string free = coeff_name(static_cast<int>(r.free_var));
  if (r.all_consistent())
    rec.verdict = Verdict::consistent;
  else if (r.consistent + r.skipped == r.trials)
    rec.verdict = Verdict::undecided;
  else
    rec.verdict = Verdict::inconsistent;
  rec.detail = std::to_string(r.consistent) + "/" + std::to_string(r.trials - r.skipped) +
               " univariate restrictions in " + free +
               " have every multiplicity of the form 3a+2b" +
               (r.k == 1 ? " apart from the " + free + " factor" : std::string()) + " (" +
               std::to_string(r.skipped) + " skipped); evidence, not proof";
  Json parts = Json::object();
  for (auto [m, d] : r.max_part_degree) parts["S" + std::to_string(m)] = d;
  rec.witness = {{"free_variable", free}, {"max_part_degree", parts}};
  for (std::size_t i = 0; i < r.details.size(); ++i)
    if (!r.details[i].skipped && !r.details[i].consistent) {
      rec.witness["first_counterexample_trial"] = i;
      break;
    }
  return rec;
}

inline CheckRecord roots_record(const RootsExpressionResult& r, std::uint64_t seed) {
  auto rec = CheckRecord::make("roots.B40", Json{{"n", 4}, {"k", 0}, {"trials", r.trials}});
  rec.seed = seed;
  rec.verdict = r.consistent ? Verdict::pass : Verdict::fail;
  rec.detail = r.detail;
  if (r.ratio) rec.witness = {{"sign", r.ratio->get_str()}};
  return rec;
}

inline CheckRecord b_formula_record(const BFormulaResult& r, std::uint64_t seed) {
  auto rec = CheckRecord::make("factor.B_closed_form", Json{{"n", r.n}, {"k", 0}});
  rec.seed = seed;
  rec.verdict = r.consistent && r.ratio ? Verdict::pass : Verdict::fail;
  rec.detail = r.detail;
  rec.witness = {{"trials_run", r.trials_run}, {"trials_skipped", r.trials_skipped}};
  if (r.ratio) rec.witness["scalar"] = r.ratio->get_str();
  return rec;
}

inline CheckRecord factor_record(const FactorizationReport& f) {
  auto rec = CheckRecord::make("factor.dd0", Json{{"n", f.n}, {"k", 0}});
  rec.verdict = f.verified ? Verdict::pass : Verdict::fail;
  rec.detail = "DD = c A^3 B^2 with c = " + f.c.get_str();
  rec.witness = {{"c", f.c.get_str()},
                 {"A_terms", f.A.size()},
                 {"B_terms", f.B.size()},
                 {"A_degree", degrees(f.A).total},
                 {"B_degree", degrees(f.B).total}};
  if (f.A.size() <= 12) rec.witness["A"] = f.A.to_string();
  if (f.B.size() <= 12) rec.witness["B"] = f.B.to_string();
  return rec;
}

// The two quartic witnesses: a triple root kills A and spares B, two double
// roots the reverse. Every k uses line orders; k = 0 also evaluates A and B.
inline Report witness_report(std::uint64_t seed, const FactorizationReport* f40 = nullptr) {
  Report rep;
  struct W {
    const char* name;
    std::vector<Integer> coeffs;
    const char* zero;
  };
  std::vector<W> ws{{"(x-2)(x+1)^3", {-2, -5, -3, 1, 1}, "A"},
                    {"(x-1)^2(x+1)^2", {1, 0, -2, 0, 1}, "B"}};
  for (const auto& w : ws) {
    for (int k = 0; k <= 4; ++k) {
      auto rec = CheckRecord::make("witness.line_order", Json{{"n", 4}, {"k", k}, {"f", w.name}});
      rec.seed = seed;
      auto o = classify_zero(4, k, w.coeffs, seed);
      bool ok = o.dd_zero && o.factor == w.zero;
      rec.verdict = ok ? Verdict::pass : Verdict::fail;
      rec.detail = std::string("DD ") + (o.dd_zero ? "= 0" : "!= 0") + ", multiplicity " +
                   std::to_string(o.order) + " -> vanishing factor " + o.factor + " (expected " +
                   w.zero + ")";
      rec.witness = {{"order", o.order}, {"factor", o.factor}};
      rep.add(std::move(rec));
    }
    if (f40) {
      auto rec = CheckRecord::make("witness.direct", Json{{"n", 4}, {"k", 0}, {"f", w.name}});
      Integer av = f40->A.evaluate(w.coeffs), bv = f40->B.evaluate(w.coeffs);
      bool want_a = std::string(w.zero) == "A";
      bool ok = (av == 0) == want_a && (bv == 0) == !want_a;
      rec.verdict = ok ? Verdict::pass : Verdict::fail;
      rec.detail = "A = " + av.get_str() + ", B = " + bv.get_str();
      rec.witness = {{"A", av.get_str()}, {"B", bv.get_str()}};
      rep.add(std::move(rec));
    }
  }
  return rep;
}

// Degree, weight, homogeneity, reversal and leading-term facts for D_n.
inline CheckRecord disc_property_record(int n, const Polynomial& d) {
  auto rec = CheckRecord::make("disc.properties", Json{{"n", n}});
  auto dg = degrees(d);
  std::string bad;
  if (!dg.homogeneous || dg.total != 2 * n - 2) bad += "total degree; ";
  if (!dg.quasi_homogeneous || dg.weighted != long(n) * (n - 1)) bad += "weighted degree; ";
  for (int k = 0; k <= n; ++k)
    if (dg.per_variable[k] != disc_degree_in(n, k)) bad += "degree in " + coeff_name(k) + "; ";
  if (reverse_coefficients(d, n) != d) bad += "reversal; ";
  Integer sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  auto lead = UniView::of(d, 0).leading();
  auto want = Polynomial::constant(d.varset(), sign * pow_int(Integer(n), n)) *
              Polynomial::variable(d.varset(), static_cast<std::size_t>(n)).pow(static_cast<unsigned>(n - 1));
  if (lead != want) bad += "leading coefficient in a0; ";
  rec.verdict = bad.empty() ? Verdict::pass : Verdict::fail;
  rec.detail = bad.empty() ? "degree " + std::to_string(dg.total) + ", weight " +
                                 std::to_string(dg.weighted) + ", " + std::to_string(d.size()) +
                                 " terms, reversal-invariant, leading term in a0 matches"
                           : "violations: " + bad;
  rec.witness = {{"terms", d.size()}, {"total_degree", dg.total}, {"weighted_degree", dg.weighted}};
  return rec;
}

// Degree formulas and homogeneity for DD_{n,k}; reversal against DD_{n,n-k}
// symbolically when the partner is given, else on seeded points.
inline CheckRecord dd_property_record(int n, int k, const Polynomial& dd,
                                      const Polynomial* partner, std::uint64_t seed,
                                      unsigned sampled = 100) {
  auto rec = CheckRecord::make("dd.properties", Json{{"n", n}, {"k", k}});
  auto want = expected_dd_degrees(n, k);
  std::string bad = dd_degree_violation(dd, n, k);
  bool rev = partner ? reversal_check(dd, *partner, n) : reversal_check_sampled(n, k, sampled, seed);
  if (!partner) rec.seed = seed;
  if (!rev) bad += "reversal; ";
  rec.verdict = bad.empty() ? Verdict::pass : Verdict::fail;
  rec.detail = bad.empty() ? "homogeneous of degree " + std::to_string(want.total) +
                                 ", weighted degree " + std::to_string(want.weighted) +
                                 ", reversal " + (partner ? "symbolic" : "on sampled points")
                           : "violations: " + bad;
  rec.witness = {{"terms", dd.size()}, {"total_degree", want.total}, {"weighted_degree", want.weighted}};
  return rec;
}

// DD_{n,0} against disc_z Res_x(f', z - f) / a_n^{2(n-2)}, equal up to a
// global sign.
inline CheckRecord oracle_symbolic_record(int n, const Polynomial& dd) {
  auto rec = CheckRecord::make("oracle.symbolic", Json{{"n", n}, {"k", 0}});
  auto sign = oracle_sign(dd0_via_oracle(n), dd);
  rec.verdict = sign ? Verdict::pass : Verdict::fail;
  rec.detail = sign ? "oracle = (" + std::to_string(*sign) + ") * DD" : "oracle differs from DD";
  if (sign) rec.witness = {{"sign", *sign}};
  return rec;
}

inline CheckRecord oracle_sampled_record(int n, unsigned trials, std::uint64_t seed,
                                         unsigned threads = 1) {
  auto rec = CheckRecord::make("oracle.sampled", Json{{"n", n}, {"k", 0}, {"trials", trials}});
  rec.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Integer>> pts;
  for (unsigned t = 0; t < trials; ++t) {
    auto pt = random_point(rng, n);
    if (pt[n] == 0) pt[n] = 1;
    pts.push_back(std::move(pt));
  }
  DoubleDiscEvaluator ev(n, 0);
  std::vector<Integer> lhs(trials), rhs(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    lhs[t] = dd0_oracle_at(pts[t]);
    rhs[t] = ev(pts[t]);
  });
  int sign = 0;
  unsigned agree = 0;
  std::optional<std::size_t> bad;
  for (unsigned t = 0; t < trials && !bad; ++t) {
    int s = lhs[t] == rhs[t] ? 1 : lhs[t] == -rhs[t] ? -1 : 0;
    if (s == 0) {
      bad = t;
    } else if (rhs[t] != 0) {
      if (sign != 0 && s != sign) bad = t;
      sign = s;
    }
    if (!bad) ++agree;
  }
  rec.verdict = bad ? Verdict::fail : Verdict::pass;
  rec.detail = std::to_string(agree) + "/" + std::to_string(trials) + " points agree" +
               (sign ? " with sign " + std::to_string(sign) : std::string());
  if (bad) {
    Json pt = Json::array();
    for (auto& x : pts[*bad]) pt.push_back(x.get_str());
    rec.witness = {{"point", pt}, {"oracle", lhs[*bad].get_str()}, {"dd", rhs[*bad].get_str()}};
  } else {
    rec.witness = {{"sign", sign}};
  }
  return rec;
}

}  // namespace ddisc

#endif  // DDISC_CHECKS_HPP
