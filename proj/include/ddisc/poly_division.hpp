#ifndef DDISC_POLY_DIVISION_HPP
#define DDISC_POLY_DIVISION_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace ddisc {

// q with p = q*d, or InexactDivisionError. No rationals are introduced.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  require_same_varset(p.varset(), d.varset());
  if (d.is_zero()) throw UsageError("exact_divide: division by zero polynomial");
  if (p.is_zero()) return Polynomial(p.varset());

  if (d.size() == 1) {
    const Term& dt = d.terms()[0];
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!dt.mono.divides(t.mono) || !divides(dt.coeff, t.coeff))
        throw InexactDivisionError("exact_divide: divisor does not divide dividend");
      out.push_back({t.mono / dt.mono, divexact(t.coeff, dt.coeff)});
    }
    // Dividing every term by one monomial preserves grevlex order.
    return Polynomial::from_sorted_terms(p.varset(), std::move(out));
  }

  const Term& lead = d.leading_term();
  if (p.leading_term().mono.total_degree() < lead.mono.total_degree())
    throw InexactDivisionError("exact_divide: divisor does not divide dividend");

  // Quotient-heap division: the heap merges the streams q_i * d[1..] so the
  // next term of p - q*d is always found at the top.
  struct Entry {
    Monomial m;
    std::uint32_t i, j;
  };
  auto less = [](const Entry& a, const Entry& b) { return grevlex_greater(b.m, a.m); };
  std::vector<Entry> heap;
  std::vector<Term> quotient;
  const auto& pt = p.terms();
  const auto& dt = d.terms();
  std::size_t pi = 0;
  Integer c;
  auto inexact = [] { throw InexactDivisionError("exact_divide: divisor does not divide dividend"); };
  while (pi < pt.size() || !heap.empty()) {
    Monomial m;
    if (heap.empty() || (pi < pt.size() && !grevlex_greater(heap.front().m, pt[pi].mono)))
      m = pt[pi].mono;
    else
      m = heap.front().m;
    if (pi < pt.size() && pt[pi].mono == m)
      c = pt[pi++].coeff;
    else
      c = 0;
    while (!heap.empty() && heap.front().m == m) {
      std::pop_heap(heap.begin(), heap.end(), less);
      Entry& e = heap.back();
      mpz_submul(c.get_mpz_t(), quotient[e.i].coeff.get_mpz_t(), dt[e.j].coeff.get_mpz_t());
      if (++e.j < dt.size()) {
        e.m = quotient[e.i].mono * dt[e.j].mono;
        std::push_heap(heap.begin(), heap.end(), less);
      } else {
        heap.pop_back();
      }
    }
    if (c == 0) continue;
    if (!lead.mono.divides(m) || !divides(lead.coeff, c)) inexact();
    Monomial qm = m / lead.mono;
    quotient.push_back({qm, divexact(c, lead.coeff)});
    heap.push_back({qm * dt[1].mono, static_cast<std::uint32_t>(quotient.size() - 1), 1});
    std::push_heap(heap.begin(), heap.end(), less);
  }
  return Polynomial::from_sorted_terms(p.varset(), std::move(quotient));
}

struct ContentPrimitive {
  Integer content;       // non-negative; 0 only for the zero polynomial
  Polynomial primitive;  // content 1, positive leading coefficient
  int sign = 1;          // p == sign * content * primitive
};

inline Integer content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ContentPrimitive content_primitive(const Polynomial& p) {
  ContentPrimitive out{content(p), Polynomial(p.varset()), 1};
  if (p.is_zero()) return out;
  out.sign = p.leading_coefficient() < 0 ? -1 : 1;
  Integer divisor = out.sign * out.content;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, divexact(t.coeff, divisor)});
  out.primitive = Polynomial::from_sorted_terms(p.varset(), std::move(terms));
  return out;
}

inline Polynomial primitive_part(const Polynomial& p) { return content_primitive(p).primitive; }

namespace detail {

inline Polynomial sqrt_peel(const Polynomial& p) {
  if (p.is_constant()) {
    auto r = exact_isqrt(p.constant_value());
    if (!r) throw NotASquareError("sqrt_exact: constant is not a perfect square");
    return Polynomial::constant(p.varset(), *r);
  }
  Degrees deg = degrees(p);
  std::size_t var = 0;
  for (std::size_t i = 1; i < deg.per_variable.size(); ++i)
    if (deg.per_variable[i] > deg.per_variable[var]) var = i;
  int top = deg.per_variable[var];
  if (top % 2 != 0) throw NotASquareError("sqrt_exact: odd degree");
  int half = top / 2;

  auto coeffs = coefficients_in(p, var);
  std::vector<Polynomial> root(static_cast<std::size_t>(half) + 1, Polynomial(p.varset()));
  root[half] = sqrt_peel(coeffs[top]);
  if (root[half].leading_coefficient() < 0) root[half] = -root[half];
  Polynomial twice_lead = Integer(2) * root[half];

  // Coefficient of var^(half+i) in root^2 is 2*root[half]*root[i] plus
  // cross terms among root[i+1..half-1].
  for (int i = half - 1; i >= 0; --i) {
    Polynomial residual = coeffs[half + i];
    for (int a = i + 1; a < half; ++a) {
      int b = half + i - a;
      if (b <= i || b >= half) continue;
      residual -= root[a] * root[b];
    }
    try {
      root[i] = exact_divide(residual, twice_lead);
    } catch (const InexactDivisionError&) {
      throw NotASquareError("sqrt_exact: peeling produced an inexact quotient");
    }
  }

  Polynomial out(p.varset());
  for (int i = half; i >= 0; --i) {
    Monomial m;
    m.set(var, static_cast<unsigned>(i));
    out += root[i].scaled({m, Integer(1)});
  }
  return out;
}

}  // namespace detail

// q with q*q == p and positive leading coefficient; NotASquareError otherwise.
// The result is always verified by re-squaring.
inline Polynomial sqrt_exact(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("sqrt_exact: zero polynomial");
  if (p.leading_coefficient() < 0) throw NotASquareError("sqrt_exact: negative leading coefficient");
  Polynomial root = detail::sqrt_peel(p);
  if (root.leading_coefficient() < 0) root = -root;
  if (!(root * root == p)) throw NotASquareError("sqrt_exact: re-squaring does not reproduce input");
  return root;
}

}  // namespace ddisc

#endif  // DDISC_POLY_DIVISION_HPP
