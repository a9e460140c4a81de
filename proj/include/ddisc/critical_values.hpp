#ifndef DDISC_CRITICAL_VALUES_HPP
#define DDISC_CRITICAL_VALUES_HPP

#include <optional>
#include <vector>

#include "double_disc.hpp"
#include "errors.hpp"
#include "generic_family.hpp"
#include "resultant.hpp"

namespace ddisc {

// g(z) = Res_x(f', z - f): lc(f')^n * prod (z - f(s_i)) over the roots s_i of
// f', i.e. a polynomial in z whose roots are the critical values of f.
inline Polynomial critical_value_poly(const UniView& f, std::size_t z,
                                      const ResultantOptions& opt = {}) {
  if (f.degree() < 2) throw UsageError("critical_value_poly: degree must be at least 2");
  if (z == f.var) throw UsageError("critical_value_poly: z must differ from x");
  if (degree_in(f.base, z) > 0) throw UsageError("critical_value_poly: f must not involve z");
  auto df = UniView::of(derivative(f.base, f.var), f.var);
  auto zf = UniView::of(Polynomial::variable(f.varset(), z) - f.base, f.var);
  return resultant(df, zf, opt);
}

// disc_z(g) / a_n^{2(n-2)}: DD_{n,0} obtained from critical values only.
// A failing division means the claimed identity is false.
inline Polynomial dd0_via_oracle(int n, const ResultantOptions& opt = {}) {
  if (n < 3) throw UsageError("dd0_via_oracle: n must be at least 3");
  auto fam = GenericFamily::make(n, {"z"});
  std::size_t z = fam.varset->index("z");
  Polynomial g = critical_value_poly(UniView::of(fam.f, fam.x()), z, opt);
  Polynomial dz = discriminant(UniView::of(g, z), opt);
  auto an = Polynomial::variable(fam.varset, fam.a(n)).pow(2u * static_cast<unsigned>(n - 2));
  Polynomial q;
  try {
    q = exact_divide(dz, an);
  } catch (const InexactDivisionError&) {
    throw FalsificationError("critical-value identity: a_n^{2(n-2)} does not divide disc_z(g)");
  }
  return rebase(q, coefficient_vars(n));
}

// Coefficients (index = power of z) of g at integer coefficients a_0..a_n.
inline std::vector<Integer> critical_value_poly_at(std::span<const Integer> a) {
  const std::size_t n = a.size() - 1;
  if (n < 2) throw UsageError("critical_value_poly_at: degree must be at least 2");
  std::vector<Integer> df(n);
  for (std::size_t j = 1; j <= n; ++j) df[j - 1] = a[j] * static_cast<unsigned long>(j);
  std::vector<Integer> zf(n + 1);
  std::vector<Integer> samples(n);  // g has degree n-1 in z
  for (std::size_t i = 0; i < n; ++i) {
    long zv = interpolation_node(i);
    for (std::size_t j = 0; j <= n; ++j) zf[j] = -a[j];
    zf[0] += zv;
    samples[i] = numeric_resultant(df, zf);
  }
  std::vector<Integer*> line;
  for (auto& s : samples) line.push_back(&s);
  std::vector<Integer> scratch;
  newton_to_monomial(line, scratch);
  return samples;
}

// Oracle value at a point with a_n != 0 (so g has its full degree n-1).
inline Integer dd0_oracle_at(std::span<const Integer> a) {
  const std::size_t n = a.size() - 1;
  if (n < 3) throw UsageError("dd0_oracle_at: n must be at least 3");
  if (a[n] == 0) throw UsageError("dd0_oracle_at: a_n must be nonzero");
  auto g = critical_value_poly_at(a);
  Integer dz = numeric_discriminant(g);
  Integer den = pow_int(a[n], 2 * static_cast<unsigned>(n - 2));
  if (!divides(den, dz))
    throw FalsificationError("critical-value identity: a_n^{2(n-2)} does not divide disc_z(g)");
  return divexact(dz, den);
}

// Sign s with oracle = s * DD, or nullopt when neither sign fits.
inline std::optional<int> oracle_sign(const Polynomial& oracle, const Polynomial& dd) {
  if (oracle == dd) return 1;
  if (oracle == -dd) return -1;
  return std::nullopt;
}

}  // namespace ddisc

#endif  // DDISC_CRITICAL_VALUES_HPP
