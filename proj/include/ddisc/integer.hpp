#ifndef DDISC_INTEGER_HPP
#define DDISC_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ddisc {

using Integer = mpz_class;

inline Integer pow_int(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exponent of p in |a|; a must be nonzero.
inline unsigned valuation(const Integer& a, unsigned long p) {
  if (a == 0) throw UsageError("valuation of zero is undefined");
  Integer pz = p;
  Integer rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t()));
}

inline std::optional<Integer> exact_isqrt(const Integer& a) {
  if (a < 0) return std::nullopt;
  if (mpz_perfect_square_p(a.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

// |value| = prod p^e * cofactor, where cofactor has no prime factor below the
// trial-division bound. Zero is represented by an empty list and cofactor 0.
struct FactoredInteger {
  std::vector<std::pair<unsigned long, unsigned>> factors;
  Integer cofactor = 1;

  Integer value() const {
    Integer v = cofactor;
    for (const auto& [p, e] : factors) v *= pow_int(Integer(p), e);
    return v;
  }

  unsigned exponent_of(unsigned long p) const {
    for (const auto& [q, e] : factors)
      if (q == p) return e;
    return 0;
  }

  bool fully_factored() const { return cofactor == 1; }

  // "2^12 3^6"; "1" for the unit; a trailing "* <cofactor>" when incomplete.
  std::string to_string() const {
    if (cofactor == 0) return "0";
    std::string out;
    for (const auto& [p, e] : factors) {
      if (!out.empty()) out += ' ';
      out += std::to_string(p);
      if (e != 1) out += '^' + std::to_string(e);
    }
    if (cofactor != 1) {
      if (!out.empty()) out += " * ";
      out += cofactor.get_str();
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    return a.factors == b.factors && a.cofactor == b.cofactor;
  }
};

inline FactoredInteger factor_by_trial_division(Integer value,
                                                unsigned long prime_bound) {
  FactoredInteger out;
  if (value == 0) {
    out.cofactor = 0;
    return out;
  }
  if (value < 0) value = -value;
  for (unsigned long p : primes_up_to(prime_bound)) {
    if (value == 1) break;
    Integer pz = p;
    Integer rest;
    auto e = mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), pz.get_mpz_t());
    if (e > 0) {
      out.factors.emplace_back(p, static_cast<unsigned>(e));
      value = rest;
    }
  }
  out.cofactor = value;
  return out;
}

}  // namespace ddisc

#endif  // DDISC_INTEGER_HPP
