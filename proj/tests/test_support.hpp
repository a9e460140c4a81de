#ifndef DDISC_TEST_SUPPORT_HPP
#define DDISC_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include <ddisc/polynomial.hpp>

namespace ddisc::testing {

// Variables x, a0..an with the usual weights.
inline VarSetPtr family_vars(int n) {
  std::vector<std::string> names{"x"};
  for (int i = 0; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return make_varset(names);
}

inline Polynomial var(const VarSetPtr& vs, const std::string& name) {
  return Polynomial::variable(vs, name);
}

inline Polynomial cst(const VarSetPtr& vs, long c) { return Polynomial::constant(vs, c); }

// Random polynomial with up to max_terms terms, exponents <= max_exp in the
// first nvars variables, coefficients in [-coef, coef].
inline Polynomial random_poly(std::mt19937_64& rng, const VarSetPtr& vs, std::size_t nvars,
                              int max_terms, int max_exp, long coef) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<long> c(-coef, coef);
  std::vector<Term> terms;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < nvars; ++v) m.set(v, static_cast<unsigned>(exp(rng)));
    terms.push_back({m, Integer(c(rng))});
  }
  return Polynomial::from_terms(vs, std::move(terms));
}

// The classical cubic discriminant written out by hand.
inline Polynomial classical_cubic_disc(const VarSetPtr& vs) {
  auto a0 = var(vs, "a0"), a1 = var(vs, "a1"), a2 = var(vs, "a2"), a3 = var(vs, "a3");
  return a1 * a1 * a2 * a2 - cst(vs, 4) * a0 * a2 * a2 * a2 - cst(vs, 4) * a1 * a1 * a1 * a3 +
         cst(vs, 18) * a0 * a1 * a2 * a3 - cst(vs, 27) * a0 * a0 * a3 * a3;
}

}  // namespace ddisc::testing

#endif  // DDISC_TEST_SUPPORT_HPP
