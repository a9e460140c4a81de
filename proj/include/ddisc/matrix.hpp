#ifndef DDISC_MATRIX_HPP
#define DDISC_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "poly_division.hpp"
#include "polynomial.hpp"

namespace ddisc {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Exact-division hooks for fraction-free elimination.
template <class T>
struct FractionFree;

template <>
struct FractionFree<Integer> {
  static bool is_zero(const Integer& a) { return a == 0; }
  static Integer one(const Integer&) { return 1; }
  static Integer zero(const Integer&) { return 0; }
  // out = (a*d - b*c) / e, e | numerator guaranteed by Sylvester's identity.
  static void cross(Integer& out, const Integer& a, const Integer& d, const Integer& b,
                    const Integer& c, const Integer& e) {
    Integer t;
    mpz_mul(out.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    mpz_mul(t.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    mpz_sub(out.get_mpz_t(), out.get_mpz_t(), t.get_mpz_t());
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), e.get_mpz_t());
  }
  static Integer negate(const Integer& a) { return -a; }
};

template <>
struct FractionFree<Polynomial> {
  static bool is_zero(const Polynomial& a) { return a.is_zero(); }
  static Polynomial one(const Polynomial& like) { return Polynomial::constant(like.varset(), 1); }
  static Polynomial zero(const Polynomial& like) { return Polynomial(like.varset()); }
  static void cross(Polynomial& out, const Polynomial& a, const Polynomial& d,
                    const Polynomial& b, const Polynomial& c, const Polynomial& e) {
    Polynomial num = a * d - b * c;
    out = e.is_constant() && e.constant_value() == 1 ? std::move(num) : exact_divide(num, e);
  }
  static Polynomial negate(const Polynomial& a) { return -a; }
};

// Bareiss elimination: every division is exact, so the result equals the
// cofactor-expansion determinant over the ring.
template <class T>
T det_fraction_free(Matrix<T> m) {
  using Ops = FractionFree<T>;
  if (!m.square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw UsageError("determinant of an empty matrix");
  bool negate = false;
  T prev = Ops::one(m(0, 0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ops::is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && Ops::is_zero(m(r, k))) ++r;
      if (r == n) return Ops::zero(m(0, 0));
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        Ops::cross(m(i, j), m(k, k), m(i, j), m(i, k), m(k, j), prev);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? Ops::negate(det) : det;
}

}  // namespace ddisc

#endif  // DDISC_MATRIX_HPP
