#ifndef DDISC_INTERPOLATION_HPP
#define DDISC_INTERPOLATION_HPP

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace ddisc {

// Deterministic interpolation nodes 0, 1, -1, 2, -2, ...
inline long interpolation_node(std::size_t i) {
  long h = static_cast<long>((i + 1) / 2);
  return i % 2 == 1 ? h : -h;
}

// Converts samples of an integer polynomial at nodes 0, 1, -1, ... (in place)
// into its monomial coefficients. Divided differences of integer polynomials at
// integer nodes are integers, so every division is exact.
inline void newton_to_monomial(std::vector<Integer*>& line, std::vector<Integer>& scratch) {
  const std::size_t len = line.size();
  if (len <= 1) return;
  const std::size_t d = len - 1;
  Integer diff;
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t i = d; i >= j; --i) {
      long den = interpolation_node(i) - interpolation_node(i - j);
      mpz_sub(diff.get_mpz_t(), line[i]->get_mpz_t(), line[i - 1]->get_mpz_t());
      if (den < 0) {
        mpz_neg(diff.get_mpz_t(), diff.get_mpz_t());
        den = -den;
      }
      mpz_divexact_ui(line[i]->get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(den));
    }
  }
  // Horner expansion of the Newton form.
  scratch.assign(len, Integer(0));
  scratch[0] = *line[d];
  Integer t;
  for (std::size_t step = 1; step <= d; ++step) {
    std::size_t i = d - step;
    long x = interpolation_node(i);
    for (std::size_t k = step; k >= 1; --k) {
      mpz_mul_si(t.get_mpz_t(), scratch[k].get_mpz_t(), x);
      mpz_sub(scratch[k].get_mpz_t(), scratch[k - 1].get_mpz_t(), t.get_mpz_t());
    }
    mpz_mul_si(t.get_mpz_t(), scratch[0].get_mpz_t(), x);
    mpz_sub(scratch[0].get_mpz_t(), line[i]->get_mpz_t(), t.get_mpz_t());
  }
  for (std::size_t k = 0; k < len; ++k) mpz_swap(line[k]->get_mpz_t(), scratch[k].get_mpz_t());
}

// Row-major dense grid of samples: axis a has dims[a] nodes. After
// to_coefficients(), entry (i_0, ..., i_{r-1}) is the coefficient of
// prod v_a^{i_a}.
class SampleGrid {
 public:
  explicit SampleGrid(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    strides_.assign(dims_.size(), 1);
    std::size_t total = 1;
    for (std::size_t a = dims_.size(); a-- > 0;) {
      strides_[a] = total;
      if (dims_[a] == 0) throw UsageError("SampleGrid: empty axis");
      total *= dims_[a];
    }
    values_.resize(total);
  }

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t stride(std::size_t axis) const { return strides_.at(axis); }
  Integer& at(std::size_t flat) { return values_[flat]; }
  const Integer& at(std::size_t flat) const { return values_[flat]; }

  std::vector<std::size_t> unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(dims_.size());
    for (std::size_t a = 0; a < dims_.size(); ++a) {
      idx[a] = flat / strides_[a];
      flat %= strides_[a];
    }
    return idx;
  }

  void to_coefficients() {
    std::vector<Integer*> line;
    std::vector<Integer> scratch;
    for (std::size_t a = 0; a < dims_.size(); ++a) {
      const std::size_t len = dims_[a], st = strides_[a];
      if (len <= 1) continue;
      line.resize(len);
      for (std::size_t base = 0; base < values_.size(); ++base) {
        if ((base / st) % len != 0) continue;
        bool all_zero = true;
        for (std::size_t i = 0; i < len; ++i) {
          line[i] = &values_[base + i * st];
          if (*line[i] != 0) all_zero = false;
        }
        if (!all_zero) newton_to_monomial(line, scratch);
      }
    }
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<Integer> values_;
};

}  // namespace ddisc

#endif  // DDISC_INTERPOLATION_HPP
