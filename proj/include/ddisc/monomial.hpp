#ifndef DDISC_MONOMIAL_HPP
#define DDISC_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

#include "errors.hpp"
#include "varset.hpp"

namespace ddisc {

using Exponent = std::uint16_t;

// Largest exponent a Monomial can hold. Keeping every exponent below 2^15
// lets products and quotients run word-parallel without cross-lane carries.
inline constexpr unsigned kMaxExponent = 0x7fff;

// Exponent vector packed four to a 64-bit word; unused slots stay zero so that
// comparison and hashing never need the owning VarSet.
class Monomial {
  static constexpr std::size_t kWords = (kMaxVars + 3) / 4;
  static constexpr std::uint64_t kHigh = 0x8000800080008000ull;

 public:
  Monomial() = default;

  Exponent operator[](std::size_t i) const noexcept {
    return static_cast<Exponent>(w_[i / 4] >> (16 * (i % 4)));
  }

  void set(std::size_t i, unsigned value) {
    if (value > kMaxExponent) throw UsageError("exponent overflow");
    total_ += value;
    total_ -= (*this)[i];
    const unsigned shift = 16 * (i % 4);
    w_[i / 4] = (w_[i / 4] & ~(0xffffull << shift)) | (std::uint64_t(value) << shift);
  }

  std::uint32_t total_degree() const noexcept { return total_; }

  long weighted_degree(const VarSet& vs) const {
    long w = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      w += static_cast<long>(vs.weight(i)) * (*this)[i];
    return w;
  }

  bool is_one() const noexcept { return total_ == 0; }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t k = 0; k < kWords; ++k)
      if ((((other.w_[k] | kHigh) - w_[k]) & kHigh) != kHigh) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint64_t over = 0;
    for (std::size_t k = 0; k < kWords; ++k) {
      r.w_[k] = a.w_[k] + b.w_[k];
      over |= r.w_[k];
    }
    if (over & kHigh) throw UsageError("exponent overflow");
    r.total_ = a.total_ + b.total_;
    return r;
  }

  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = a.w_[k] - b.w_[k];
    r.total_ = a.total_ - b.total_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.w_ == b.w_;
  }

  // Graded reverse lexicographic: higher total degree first; ties broken by
  // the last variable, smaller exponent there being the larger monomial.
  friend bool grevlex_greater(const Monomial& a, const Monomial& b) noexcept {
    if (a.total_ != b.total_) return a.total_ > b.total_;
    for (std::size_t k = kWords; k-- > 0;) {
      if (a.w_[k] == b.w_[k]) continue;
      for (unsigned shift = 48;; shift -= 16) {
        auto x = (a.w_[k] >> shift) & 0xffff, y = (b.w_[k] >> shift) & 0xffff;
        if (x != y) return x < y;
      }
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : w_) {
      h ^= x;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, kWords> w_{};
  std::uint32_t total_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grevlex_greater(a, b);
  }
};

}  // namespace ddisc

#endif  // DDISC_MONOMIAL_HPP
