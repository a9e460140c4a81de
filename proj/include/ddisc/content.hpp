#ifndef DDISC_CONTENT_HPP
#define DDISC_CONTENT_HPP

#include <random>
#include <string>
#include <vector>

#include "double_disc.hpp"
#include "integer.hpp"
#include "poly_division.hpp"

namespace ddisc {

inline constexpr unsigned long kDefaultPrimeBound = 1000;

enum class ContentKind { exact, upper_bound, lower_bound };

inline const char* to_string(ContentKind k) {
  switch (k) {
    case ContentKind::exact: return "exact";
    case ContentKind::upper_bound: return "upper_bound";
    case ContentKind::lower_bound: return "lower_bound";
  }
  return "?";
}

struct ContentRecord {
  int n = 0, k = 0;
  ContentKind kind = ContentKind::exact;
  FactoredInteger value;
  std::string method;  // direct | compressed-specialization | 2-adic-theorem
  bool inconclusive = false;
  unsigned runs = 0, degenerate_runs = 0;
};

inline ContentRecord content_exact(int n, int k, const Polynomial& dd,
                                   unsigned long prime_bound = kDefaultPrimeBound) {
  ContentRecord r;
  r.n = n;
  r.k = k;
  r.kind = ContentKind::exact;
  r.value = factor_by_trial_division(content(dd), prime_bound);
  r.method = "direct";
  r.runs = 1;
  return r;
}

inline ContentRecord content_exact(int n, int k, const DoubleDiscOptions& opt = {},
                                   unsigned long prime_bound = kDefaultPrimeBound) {
  return content_exact(n, k, double_disc(n, k, opt), prime_bound);
}

// The guaranteed power of two: 2^{n-1}, or 2^n when 1 <= k <= n/2.
inline ContentRecord content_lower_bound(int n, int k) {
  ContentRecord r;
  r.n = n;
  r.k = k;
  r.kind = ContentKind::lower_bound;
  unsigned e = (k >= 1 && 2 * k <= n) ? n : n - 1;
  r.value.factors.emplace_back(2, e);
  r.method = "2-adic-theorem";
  return r;
}

// One compressed specialization: fixed[i] set means a_i is an integer.
using Specialization = std::vector<std::optional<Integer>>;

// Deterministic portfolio: a_k and one partner a_j stay symbolic; the others
// are 1, alternating signs, zeros in a sliding window, or seeded small values.
inline std::vector<Specialization> compressed_portfolio(int n, int k, unsigned random_runs,
                                                        std::uint64_t seed) {
  std::vector<Specialization> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int j = 0; j <= n; ++j) {
    if (j == k) continue;
    auto base = [&](auto value_of) {
      Specialization s(n + 1);
      for (int i = 0; i <= n; ++i)
        if (i != k && i != j) s[i] = Integer(value_of(i));
      out.push_back(std::move(s));
    };
    base([](int) { return 1L; });
    base([](int i) { return i % 2 ? -1L : 1L; });
    base([](int i) { return long(i + 1); });
    for (int z = 0; z <= n; ++z) base([z](int i) { return (i == z || i == z + 1) ? 0L : 1L; });
    for (unsigned r = 0; r < random_runs; ++r) base([&](int) { return small(rng); });
  }
  return out;
}

// GCD of the contents of specialized DDs. Every specialization of c*A^3*B^2
// has content divisible by c, so the GCD is a multiple of c. Runs where the
// specialized DD vanishes identically carry no information and are skipped.
inline ContentRecord content_upper_bound(int n, int k, const std::vector<Specialization>& runs,
                                         unsigned long prime_bound = kDefaultPrimeBound,
                                         const ResultantOptions& ropt = {}) {
  ContentRecord r;
  r.n = n;
  r.k = k;
  r.kind = ContentKind::upper_bound;
  r.method = "compressed-specialization";
  Integer g = 0;
  for (const auto& s : runs) {
    ++r.runs;
    Polynomial dd = specialized_double_disc(n, k, s, ropt);
    if (dd.is_zero()) {
      ++r.degenerate_runs;
      continue;
    }
    Integer c = content(dd);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g == 0) {
    r.inconclusive = true;
    r.value.cofactor = 0;
    return r;
  }
  r.value = factor_by_trial_division(g, prime_bound);
  return r;
}

inline ContentRecord content_upper_bound(int n, int k, std::uint64_t seed,
                                         unsigned random_runs = 2,
                                         unsigned long prime_bound = kDefaultPrimeBound) {
  return content_upper_bound(n, k, compressed_portfolio(n, k, random_runs, seed), prime_bound);
}

// Valuation of the recorded value (cofactor included, so exact for any p).
inline unsigned record_valuation(const ContentRecord& r, unsigned long p) {
  unsigned e = r.value.exponent_of(p);
  if (r.value.cofactor != 0 && r.value.cofactor != 1) e += valuation(r.value.cofactor, p);
  return e;
}

}  // namespace ddisc

#endif  // DDISC_CONTENT_HPP
