#ifndef DDISC_UNIVIEW_HPP
#define DDISC_UNIVIEW_HPP

#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace ddisc {

using PolyMatrix = Matrix<Polynomial>;

// A polynomial viewed as univariate in one variable. coeffs[j] multiplies
// var^j; the last entry is nonzero unless base itself is zero.
struct UniView {
  Polynomial base;
  std::size_t var = 0;
  std::vector<Polynomial> coeffs;

  static UniView of(const Polynomial& p, std::size_t var) {
    return UniView{p, var, coefficients_in(p, var)};
  }

  static UniView of(const Polynomial& p, const std::string& var) {
    return of(p, p.varset()->index(var));
  }

  const VarSetPtr& varset() const { return base.varset(); }
  bool is_zero() const { return coeffs.empty(); }

  int degree() const {
    return coeffs.empty() ? kMinusInfinity : static_cast<int>(coeffs.size()) - 1;
  }

  const Polynomial& leading() const {
    if (coeffs.empty()) throw UsageError("zero polynomial has no leading coefficient");
    return coeffs.back();
  }

  Polynomial reassemble() const {
    Polynomial out(base.varset());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      Monomial m;
      m.set(var, static_cast<unsigned>(j));
      out += coeffs[j].scaled({m, Integer(1)});
    }
    return out;
  }
};

namespace detail {

inline void require_compatible(const UniView& f, const UniView& g) {
  require_same_varset(f.varset(), g.varset());
  if (f.var != g.var) throw UsageError("resultant: views use different variables");
}

// Fills a Sylvester layout: n rows carrying f's coefficients (highest first)
// shifted right one column per row, then m rows carrying g's.
template <class T, class Coeffs>
Matrix<T> sylvester_layout(const Coeffs& f, const Coeffs& g, const T& zero) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  Matrix<T> s(m + n, m + n, zero);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = f[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s(n + r, r + j) = g[n - j];
  return s;
}

}  // namespace detail

inline PolyMatrix sylvester(const UniView& f, const UniView& g) {
  detail::require_compatible(f, g);
  if (f.is_zero() || g.is_zero()) throw UsageError("sylvester: zero polynomial");
  if (f.degree() < 1 && g.degree() < 1)
    throw UsageError("sylvester: both polynomials are constant (0x0 matrix)");
  return detail::sylvester_layout(f.coeffs, g.coeffs, Polynomial(f.varset()));
}

inline Polynomial det_fraction_free(const PolyMatrix& m) {
  return det_fraction_free<Polynomial>(m);
}

}  // namespace ddisc

#endif  // DDISC_UNIVIEW_HPP
