#ifndef DDISC_UPOLY_HPP
#define DDISC_UPOLY_HPP

#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace ddisc {

// Dense univariate integer polynomial, c[i] multiplies t^i, no trailing zeros.
using UPoly = std::vector<Integer>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return p.empty() ? -1 : static_cast<int>(p.size()) - 1; }

inline UPoly uderivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

inline Integer ucontent(const UPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
inline UPoly uprimitive(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  Integer g = ucontent(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

inline UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Pseudo-remainder of a by b.
inline UPoly uprem(UPoly a, const UPoly& b) {
  if (b.empty()) throw UsageError("uprem: division by zero");
  const Integer& lb = b.back();
  Integer lead;
  while (udeg(a) >= udeg(b)) {
    std::size_t shift = a.size() - b.size();
    lead = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lead * b[i];
    trim(a);
  }
  return a;
}

// Exact quotient a / b over Z; throws when b does not divide a.
inline UPoly udivexact(UPoly a, const UPoly& b) {
  if (b.empty()) throw UsageError("udivexact: division by zero");
  trim(a);
  if (udeg(a) < udeg(b)) {
    if (a.empty()) return a;
    throw InexactDivisionError("udivexact: inexact division");
  }
  UPoly q(a.size() - b.size() + 1, Integer(0));
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = a[k + b.size() - 1];
    if (!divides(lb, top)) throw InexactDivisionError("udivexact: inexact division");
    q[k] = divexact(top, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim(a);
  if (!a.empty()) throw InexactDivisionError("udivexact: inexact division");
  trim(q);
  return q;
}

// Primitive gcd with positive leading coefficient (primitive PRS).
inline UPoly ugcd(UPoly a, UPoly b) {
  a = uprimitive(std::move(a));
  b = uprimitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (udeg(a) < udeg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = uprimitive(uprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Squarefree decomposition of a nonzero polynomial (Yun): p = c * prod S_i^i.
// parts[i-1] is S_i, primitive with positive leading coefficient.
struct SquarefreeDecomposition {
  Integer unit;  // signed integer c
  std::vector<UPoly> parts;

  int degree_of(std::size_t multiplicity) const {
    if (multiplicity == 0 || multiplicity > parts.size()) return 0;
    return udeg(parts[multiplicity - 1]);
  }
};

inline SquarefreeDecomposition squarefree_decomposition(const UPoly& p_in) {
  UPoly p = p_in;
  trim(p);
  if (p.empty()) throw UsageError("squarefree_decomposition: zero polynomial");
  SquarefreeDecomposition out;
  UPoly a = uprimitive(p);
  out.unit = divexact(p.back(), a.back());
  if (udeg(a) == 0) return out;
  UPoly b = uderivative(a);
  UPoly c = ugcd(a, b);
  UPoly w = udivexact(a, c);
  UPoly y = udivexact(b, c);
  UPoly z = usub(y, uderivative(w));
  while (udeg(w) > 0) {
    UPoly g = ugcd(w, z);
    out.parts.push_back(g);
    w = udivexact(w, g);
    y = udivexact(z, g);
    z = usub(y, uderivative(w));
  }
  while (!out.parts.empty() && udeg(out.parts.back()) == 0) out.parts.pop_back();
  return out;
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return r;
}

// Multiplicity of t as a factor (index of the lowest nonzero coefficient).
inline int order_at_zero(const UPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace ddisc

#endif  // DDISC_UPOLY_HPP
