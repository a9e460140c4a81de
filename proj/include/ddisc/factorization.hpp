#ifndef DDISC_FACTORIZATION_HPP
#define DDISC_FACTORIZATION_HPP

#include <random>
#include <string>

#include "double_disc.hpp"
#include "errors.hpp"
#include "generic_family.hpp"
#include "poly_division.hpp"
#include "report.hpp"

namespace ddisc {

// DD_{n,k} = c * monomial_factor * A^3 * B^2 with A, B primitive and
// positive-leading.
struct FactorizationReport {
  int n = 0, k = 0;
  Integer c;
  Polynomial A, B, monomial_factor;
  bool verified = false;

  Polynomial reassemble() const {
    return Polynomial::constant(A.varset(), c) * monomial_factor * A.pow(3) * B.pow(2);
  }
};

// Primitive part of disc_x(f'), over a0..an (a0 absent).
inline Polynomial dd0_cube_factor(int n, const ResultantOptions& opt = {}) {
  if (n < 3) throw UsageError("dd0_cube_factor: n must be at least 3");
  auto fam = GenericFamily::make(n);
  auto df = UniView::of(derivative(fam.f, fam.x()), fam.x());
  return primitive_part(rebase(discriminant(df, opt), coefficient_vars(n)));
}

inline FactorizationReport factor_dd0(int n, const Polynomial& dd) {
  FactorizationReport rep;
  rep.n = n;
  rep.k = 0;
  rep.A = dd0_cube_factor(n);
  rep.monomial_factor = Polynomial::constant(dd.varset(), 1);
  auto cp = content_primitive(dd);
  if (dd.is_zero()) throw FalsificationError("factor_dd0: DD_{n,0} is zero");
  Polynomial q;
  try {
    q = exact_divide(cp.primitive, rep.A.pow(3));
  } catch (const InexactDivisionError&) {
    throw FalsificationError("factor_dd0: A^3 does not divide DD_{" + std::to_string(n) +
                             ",0}; A = " + rep.A.to_string());
  }
  int qsign = q.leading_coefficient() < 0 ? -1 : 1;
  if (qsign < 0) q = -q;
  try {
    rep.B = sqrt_exact(q);
  } catch (const NotASquareError&) {
    throw FalsificationError("factor_dd0: DD_{" + std::to_string(n) +
                             ",0} / A^3 is not a square (quotient has " +
                             std::to_string(q.size()) + " terms)");
  }
  rep.c = Integer(cp.sign * qsign) * cp.content;
  rep.verified = rep.reassemble() == dd;
  if (!rep.verified) throw FalsificationError("factor_dd0: reassembly does not reproduce DD");
  return rep;
}

inline FactorizationReport factor_dd0(int n, const DoubleDiscOptions& opt = {}) {
  return factor_dd0(n, double_disc(n, 0, opt));
}

// Rational evaluation of an integer polynomial.
inline mpq_class evaluate_rational(const Polynomial& p, const std::vector<mpq_class>& values) {
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class term = t.coeff;
    for (std::size_t i = 0; i < values.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) term *= values[i];
    sum += term;
  }
  return sum;
}

// Coefficients (index = power) of n * an * prod (x - s_i) integrated, with
// constant term a0.
inline std::vector<mpq_class> integrate_critical_points(int n, const Integer& an,
                                                        const std::vector<long>& s,
                                                        const Integer& a0) {
  std::vector<Integer> d{Integer(n) * an};
  for (long si : s) {
    std::vector<Integer> next(d.size() + 1, Integer(0));
    for (std::size_t j = 0; j < d.size(); ++j) {
      next[j + 1] += d[j];
      next[j] -= d[j] * si;
    }
    d = next;
  }
  std::vector<mpq_class> f(d.size() + 1);
  f[0] = a0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    f[j + 1] = mpq_class(d[j], Integer(static_cast<unsigned long>(j + 1)));
    f[j + 1].canonicalize();
  }
  return f;
}

inline mpq_class horner_q(const std::vector<mpq_class>& f, const mpq_class& x) {
  mpq_class v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return v;
}

struct BFormulaResult {
  int n = 0;
  unsigned trials_run = 0, trials_skipped = 0;
  std::optional<mpq_class> ratio;  // closed form / extracted B, identical on every trial
  bool consistent = true;
  std::string detail;
};

// Compares the critical-point product formula for B_{n,0} with the extracted
// B at points built from chosen critical points s_i. The two may differ by a
// constant rational factor; it must be the same factor on every trial.
inline BFormulaResult b_formula_check(int n, const Polynomial& B, unsigned trials,
                                      std::uint64_t seed) {
  BFormulaResult res;
  res.n = n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> sd(-6, 6), ad(-3, 3), a0d(-50, 50);
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<long> s(n - 1);
    for (auto& v : s) v = sd(rng);
    long an = 0;
    while (an == 0) an = ad(rng);
    Integer a0 = a0d(rng);
    bool repeated = false;
    for (int i = 0; i < n - 1; ++i)
      for (int j = i + 1; j < n - 1; ++j) repeated |= s[i] == s[j];
    if (repeated) {
      ++res.trials_skipped;
      continue;
    }
    auto f = integrate_critical_points(n, Integer(an), s, a0);
    mpq_class closed = pow_int(Integer(n), static_cast<unsigned long>(n - 2));
    long e = long(n - 2) * (n - 4);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) {
      if (e < 0)
        closed /= an;
      else
        closed *= an;
    }
    for (int i = 0; i < n - 1; ++i)
      for (int j = i + 1; j < n - 1; ++j) {
        mpq_class num = horner_q(f, s[i]) - horner_q(f, s[j]);
        mpq_class den = s[i] - s[j];
        closed *= num / (den * den * den);
      }
    mpq_class bval = evaluate_rational(B, f);
    ++res.trials_run;
    if (bval == 0 || closed == 0) {
      if ((bval == 0) != (closed == 0)) {
        res.consistent = false;
        res.detail = "one side vanishes alone at trial " + std::to_string(t);
        return res;
      }
      continue;
    }
    mpq_class r = closed / bval;
    if (!res.ratio) {
      res.ratio = r;
    } else if (*res.ratio != r) {
      res.consistent = false;
      res.detail = "ratio changed from " + res.ratio->get_str() + " to " + r.get_str() +
                   " at trial " + std::to_string(t);
      return res;
    }
  }
  if (res.ratio) res.detail = "closed form = (" + res.ratio->get_str() + ") * B on every trial";
  return res;
}

}  // namespace ddisc

#endif  // DDISC_FACTORIZATION_HPP
