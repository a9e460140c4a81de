#ifndef DDISC_POLYNOMIAL_HPP
#define DDISC_POLYNOMIAL_HPP

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "monomial.hpp"
#include "varset.hpp"

namespace ddisc {

struct Term {
  Monomial mono;
  Integer coeff;
};

// Sparse polynomial with integer coefficients. Terms are kept sorted in
// descending grevlex order with no zero coefficients, so structural equality
// is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarSetPtr vars, const Integer& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static Polynomial variable(VarSetPtr vars, std::size_t index) {
    if (index >= vars->size()) throw UsageError("variable index out of range");
    Polynomial p(std::move(vars));
    Monomial m;
    m.set(index, 1);
    p.terms_.push_back({m, Integer(1)});
    return p;
  }

  static Polynomial variable(VarSetPtr vars, const std::string& name) {
    auto i = vars->index(name);
    return variable(std::move(vars), i);
  }

  static Polynomial monomial(VarSetPtr vars, const Monomial& m,
                             const Integer& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  // Combines duplicate monomials and drops zeros.
  static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return grevlex_greater(a.mono, b.mono);
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
  }

  // Terms must already be strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
  }

  const VarSetPtr& varset() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  Integer constant_value() const {
    if (!is_constant()) throw UsageError("polynomial is not constant");
    return terms_.empty() ? Integer(0) : terms_[0].coeff;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
    return terms_.front();
  }

  const Integer& leading_coefficient() const { return leading_term().coeff; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    return merge(p, q, false);
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return merge(p, q, true);
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_varset(p.vars_, q.vars_);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.vars_);
    const Polynomial& small = p.size() <= q.size() ? p : q;
    const Polynomial& big = p.size() <= q.size() ? q : p;
    if (small.size() == 1) return big.scaled(small.terms_[0]);
    // Heap merge of the sorted streams small[i] * big[0..]; output arrives in
    // canonical order, so nothing needs sorting afterwards.
    struct Entry {
      Monomial m;
      std::uint32_t i, j;
    };
    auto less = [](const Entry& a, const Entry& b) { return grevlex_greater(b.m, a.m); };
    std::vector<Entry> heap;
    heap.reserve(small.size());
    for (std::uint32_t i = 0; i < small.size(); ++i)
      heap.push_back({small.terms_[i].mono * big.terms_[0].mono, i, 0});
    std::make_heap(heap.begin(), heap.end(), less);
    Polynomial r(p.vars_);
    Integer acc;
    while (!heap.empty()) {
      Monomial m = heap.front().m;
      acc = 0;
      while (!heap.empty() && heap.front().m == m) {
        std::pop_heap(heap.begin(), heap.end(), less);
        Entry& e = heap.back();
        mpz_addmul(acc.get_mpz_t(), small.terms_[e.i].coeff.get_mpz_t(),
                   big.terms_[e.j].coeff.get_mpz_t());
        if (++e.j < big.size()) {
          e.m = small.terms_[e.i].mono * big.terms_[e.j].mono;
          std::push_heap(heap.begin(), heap.end(), less);
        } else {
          heap.pop_back();
        }
      }
      if (acc != 0) r.terms_.push_back({m, acc});
    }
    return r;
  }

  friend Polynomial operator*(const Integer& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.vars_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  // Multiply by a single term.
  Polynomial scaled(const Term& t) const {
    Polynomial r(vars_);
    if (t.coeff == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& s : terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(vars_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  // Full evaluation; values has one entry per variable.
  Integer evaluate(std::span<const Integer> values) const {
    if (values.size() != vars_->size())
      throw UsageError("evaluate: wrong number of values");
    Integer sum = 0, term, pw;
    for (const auto& t : terms_) {
      term = t.coeff;
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (t.mono[i] == 0) continue;
        mpz_pow_ui(pw.get_mpz_t(), values[i].get_mpz_t(), t.mono[i]);
        term *= pw;
      }
      sum += term;
    }
    return sum;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (!same_varset(p.vars_, q.vars_)) return false;
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (!(p.terms_[i].mono == q.terms_[i].mono) ||
          p.terms_[i].coeff != q.terms_[i].coeff)
        return false;
    return true;
  }

  // Human-readable form, e.g. "a1^2 - 4*a0*a2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Integer c = t.coeff;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (c < 0) c = -c;
      std::string mono;
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += vars_->name(i);
        if (t.mono[i] > 1) mono += '^' + std::to_string(t.mono[i]);
      }
      if (mono.empty())
        out += c.get_str();
      else if (c == 1)
        out += mono;
      else
        out += c.get_str() + "*" + mono;
      first = false;
    }
    return out;
  }

  static Polynomial from_map(
      VarSetPtr vars, std::unordered_map<Monomial, Integer, MonomialHash>&& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) terms.push_back({m, std::move(c)});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return grevlex_greater(a.mono, b.mono);
    });
    return from_sorted_terms(std::move(vars), std::move(terms));
  }

 private:
  static Polynomial merge(const Polynomial& p, const Polynomial& q, bool subtract) {
    require_same_varset(p.vars_, q.vars_);
    Polynomial r(p.vars_);
    r.terms_.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
      if (j == q.size() ||
          (i < p.size() && grevlex_greater(p.terms_[i].mono, q.terms_[j].mono))) {
        r.terms_.push_back(p.terms_[i++]);
      } else if (i == p.size() || grevlex_greater(q.terms_[j].mono, p.terms_[i].mono)) {
        Term t = q.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Integer c = p.terms_[i].coeff;
        if (subtract) c -= q.terms_[j].coeff;
        else c += q.terms_[j].coeff;
        if (c != 0) r.terms_.push_back({p.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

enum class RingOp { add, sub, mul };

inline Polynomial ring_arith(const Polynomial& p, const Polynomial& q, RingOp op) {
  switch (op) {
    case RingOp::add: return p + q;
    case RingOp::sub: return p - q;
    case RingOp::mul: return p * q;
  }
  throw UsageError("unknown ring operation");
}

inline Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.varset()->size()) throw UsageError("derivative: unknown variable");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms.
  return Polynomial::from_terms(p.varset(), std::move(out));
}

inline Polynomial derivative(const Polynomial& p, const std::string& var) {
  return derivative(p, p.varset()->index(var));
}

// Partial substitution: each assigned variable maps to an integer or to a
// polynomial over the same VarSet.
using Substitute = std::variant<Integer, Polynomial>;
using Assignment = std::map<std::size_t, Substitute>;

inline Polynomial specialize(const Polynomial& p, const Assignment& assignment) {
  const auto& vars = p.varset();
  for (const auto& [v, s] : assignment) {
    if (v >= vars->size()) throw UsageError("specialize: unknown variable");
    if (auto* q = std::get_if<Polynomial>(&s)) require_same_varset(vars, q->varset());
  }
  if (assignment.empty()) return p;

  bool integers_only = std::all_of(assignment.begin(), assignment.end(), [](const auto& kv) {
    return std::holds_alternative<Integer>(kv.second);
  });

  if (integers_only) {
    // Cache powers per variable.
    std::map<std::pair<std::size_t, unsigned>, Integer> powers;
    auto power = [&](std::size_t v, unsigned e) -> const Integer& {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it != powers.end()) return it->second;
      return powers.emplace(key, pow_int(std::get<Integer>(assignment.at(v)), e))
          .first->second;
    };
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    for (const auto& t : p.terms()) {
      Integer c = t.coeff;
      Monomial m = t.mono;
      for (const auto& [v, s] : assignment) {
        unsigned e = m[v];
        if (e == 0) continue;
        c *= power(v, e);
        m.set(v, 0);
        if (c == 0) break;
      }
      if (c != 0) acc[m] += c;
    }
    return Polynomial::from_map(vars, std::move(acc));
  }

  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial base = std::visit(
        [&](const auto& s) -> Polynomial {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Integer>)
            return Polynomial::constant(vars, s);
          else
            return s;
        },
        assignment.at(v));
    return powers.emplace(key, base.pow(e)).first->second;
  };
  Polynomial result(vars);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    Polynomial term = Polynomial::constant(vars, 1);
    for (const auto& [v, s] : assignment) {
      unsigned e = m[v];
      if (e == 0) continue;
      term = term * power(v, e);
      m.set(v, 0);
    }
    result += term.scaled({m, t.coeff});
  }
  return result;
}

// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = INT_MIN;

struct Degrees {
  bool is_zero = false;
  std::vector<int> per_variable;  // kMinusInfinity entries for the zero polynomial
  int total = kMinusInfinity;
  long weighted = kMinusInfinity;
  bool homogeneous = false;
  bool quasi_homogeneous = false;
};

inline Degrees degrees(const Polynomial& p) {
  const auto& vars = *p.varset();
  Degrees d;
  if (p.is_zero()) {
    d.is_zero = true;
    d.per_variable.assign(vars.size(), kMinusInfinity);
    return d;
  }
  d.per_variable.assign(vars.size(), 0);
  d.homogeneous = true;
  d.quasi_homogeneous = true;
  bool first = true;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      d.per_variable[i] = std::max<int>(d.per_variable[i], t.mono[i]);
    int tot = static_cast<int>(t.mono.total_degree());
    long w = t.mono.weighted_degree(vars);
    if (first) {
      d.total = tot;
      d.weighted = w;
      first = false;
      continue;
    }
    if (tot != d.total) d.homogeneous = false;
    if (w != d.weighted) d.quasi_homogeneous = false;
    d.total = std::max(d.total, tot);
    d.weighted = std::max(d.weighted, w);
  }
  return d;
}

inline int degree_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return kMinusInfinity;
  int d = 0;
  for (const auto& t : p.terms()) d = std::max<int>(d, t.mono[var]);
  return d;
}

// Variables that occur in p.
inline std::vector<std::size_t> support_variables(const Polynomial& p) {
  std::vector<bool> used(p.varset()->size(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < used.size(); ++i)
      if (t.mono[i] != 0) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

// Dense coefficient list of p viewed as univariate in var: p = sum c[j]*var^j.
// The zero polynomial yields an empty list.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  if (var >= p.varset()->size()) throw UsageError("unknown variable");
  int deg = degree_in(p, var);
  if (deg == kMinusInfinity) return {};
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(deg) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    parts[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.push_back(Polynomial::from_terms(p.varset(), std::move(part)));
  return out;
}

// Same polynomial over another VarSet; variables are matched by name.
inline Polynomial rebase(const Polynomial& p, const VarSetPtr& target) {
  const auto& src = *p.varset();
  std::vector<std::size_t> map(src.size());
  auto used = support_variables(p);
  for (std::size_t i : used) map[i] = target->index(src.name(i));
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i : used) m.set(map[i], t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// Applies a permutation of variable indices: variable i becomes perm[i].
inline Polynomial permute_variables(const Polynomial& p,
                                    const std::vector<std::size_t>& perm) {
  if (perm.size() != p.varset()->size()) throw UsageError("permutation size mismatch");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (t.mono[i]) m.set(perm[i], t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(p.varset(), std::move(out));
}

}  // namespace ddisc

#endif  // DDISC_POLYNOMIAL_HPP
