#ifndef DDISC_GENERIC_FAMILY_HPP
#define DDISC_GENERIC_FAMILY_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "resultant.hpp"

namespace ddisc {

inline std::string coeff_name(int i) { return "a" + std::to_string(i); }

// f = sum a_i x^i over the variables (x, a0, ..., an).
struct GenericFamily {
  int n = 0;
  VarSetPtr varset;
  Polynomial f;

  static GenericFamily make(int n, const std::vector<std::string>& extra = {}) {
    if (n < 1) throw UsageError("generic family needs degree >= 1");
    std::vector<std::string> names{"x"};
    for (int i = 0; i <= n; ++i) names.push_back(coeff_name(i));
    names.insert(names.end(), extra.begin(), extra.end());
    GenericFamily fam{n, make_varset(names), Polynomial()};
    fam.f = Polynomial(fam.varset);
    auto x = Polynomial::variable(fam.varset, 0);
    for (int i = 0; i <= n; ++i)
      fam.f += Polynomial::variable(fam.varset, coeff_name(i)) * x.pow(static_cast<unsigned>(i));
    return fam;
  }

  std::size_t x() const { return 0; }
  std::size_t a(int i) const { return static_cast<std::size_t>(i) + 1; }
};

// Variables a0, ..., an: the home of D_n and DD_{n,k}.
inline VarSetPtr coefficient_vars(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(coeff_name(i));
  return make_varset(names);
}

// D_n = disc_x f over a0..an. Memoized per process.
inline Polynomial generic_disc(int n) {
  if (n < 2) throw UsageError("generic_disc: n must be at least 2");
  static std::mutex mu;
  static std::map<int, Polynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  auto fam = GenericFamily::make(n);
  Polynomial d = rebase(discriminant(UniView::of(fam.f, fam.x())), coefficient_vars(n));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(d)).first->second;
}

// Generic discriminant evaluated at integer coefficients c_0..c_d of formal
// degree d. Same as numeric_formal_discriminant; named for readability.
inline Integer disc_at(std::span<const Integer> c) { return numeric_formal_discriminant(c); }

// deg_{a_k} D_n: n-1 at the ends, n in between.
inline int disc_degree_in(int n, int k) { return (k == 0 || k == n) ? n - 1 : n; }

}  // namespace ddisc

#endif  // DDISC_GENERIC_FAMILY_HPP
