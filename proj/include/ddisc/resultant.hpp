#ifndef DDISC_RESULTANT_HPP
#define DDISC_RESULTANT_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "errors.hpp"
#include "interpolation.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "poly_division.hpp"
#include "polynomial.hpp"
#include "uniview.hpp"

namespace ddisc {

enum class Strategy { direct, interpolate };

struct ResultantOptions {
  Strategy strategy = Strategy::direct;
  unsigned threads = 1;
  // Random full-dimensional points at which an interpolated result is
  // re-checked against a direct numeric determinant.
  unsigned validation_points = 3;
  std::uint64_t validation_seed = 0x5eedULL;
};

// Determinant of the Sylvester matrix of two integer coefficient lists
// (index = power). Formal degrees are the list lengths minus one, so a
// vanishing leading entry is allowed.
inline Integer numeric_resultant(std::span<const Integer> f, std::span<const Integer> g) {
  if (f.empty() || g.empty()) throw UsageError("numeric_resultant: empty coefficient list");
  if (f.size() == 1 && g.size() == 1) throw UsageError("numeric_resultant: both constant");
  return det_fraction_free<Integer>(detail::sylvester_layout(f, g, Integer(0)));
}

// (-1)^{d(d-1)/2} Res(f, f') / lc(f) for an integer polynomial of degree
// d >= 1 with nonzero leading coefficient.
inline Integer numeric_discriminant(std::span<const Integer> f) {
  if (f.size() < 2) throw UsageError("numeric_discriminant: degree < 1");
  if (f.back() == 0) throw UsageError("numeric_discriminant: vanishing leading coefficient");
  const std::size_t d = f.size() - 1;
  if (d == 1) return 1;
  std::vector<Integer> df(d);
  for (std::size_t j = 1; j <= d; ++j) df[j - 1] = f[j] * static_cast<unsigned long>(j);
  Integer r = divexact(numeric_resultant(f, df), f.back());
  return (d * (d - 1) / 2) % 2 == 1 ? Integer(-r) : r;
}

namespace detail {

// Maximum of sum(deg[i][sigma(i)]) over permutations; -1 entries are zero
// matrix entries. Returns -1 when no permutation avoids them.
inline long max_permutation_degree(const Matrix<long>& deg) {
  const std::size_t n = deg.rows();
  if (n <= 20) {
    const long neg = std::numeric_limits<long>::min() / 4;
    std::vector<long> best(std::size_t(1) << n, neg);
    best[0] = 0;
    for (std::size_t mask = 0; mask < best.size(); ++mask) {
      if (best[mask] == neg) continue;
      std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (row == n) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (std::size_t(1) << c) || deg(row, c) < 0) continue;
        auto& slot = best[mask | (std::size_t(1) << c)];
        slot = std::max(slot, best[mask] + deg(row, c));
      }
    }
    return best.back() == neg ? -1 : best.back();
  }
  long sum = 0;
  for (std::size_t r = 0; r < n; ++r) {
    long m = -1;
    for (std::size_t c = 0; c < n; ++c) m = std::max(m, deg(r, c));
    if (m < 0) return -1;
    sum += m;
  }
  return sum;
}

// Weighted degree of every term of p must agree once var is given weight w_var.
// Returns the common weight, with w_var solved when p constrains it.
struct GradingFit {
  bool homogeneous = false;
  std::optional<long> var_weight;  // empty when p leaves it unconstrained
  long base_weight = 0;            // sum over the other variables of one term
  long var_exponent = 0;           // var exponent of that term
};

inline GradingFit fit_grading(const Polynomial& p, std::size_t var, const std::vector<long>& w) {
  GradingFit fit;
  if (p.is_zero()) return fit;
  auto weight_without = [&](const Term& t) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != var) s += w[i] * t.mono[i];
    return s;
  };
  const Term& t0 = p.terms()[0];
  long w0 = weight_without(t0), e0 = t0.mono[var];
  for (const auto& t : p.terms()) {
    long wt = weight_without(t), et = t.mono[var];
    if (et != e0) {
      long num = w0 - wt, den = et - e0;
      if (num % den != 0) return fit;
      fit.var_weight = num / den;
      break;
    }
  }
  long wv = fit.var_weight.value_or(0);
  for (const auto& t : p.terms())
    if (weight_without(t) + wv * t.mono[var] != w0 + wv * e0) return fit;
  fit.homogeneous = true;
  fit.base_weight = w0;
  fit.var_exponent = e0;
  return fit;
}

struct OutputGrading {
  std::vector<long> weights;  // per VarSet index; the eliminated variable unused
  long degree = 0;            // weighted degree of Res(f, g)
};

// Res(f, g) is homogeneous of weight deg(g)*A + deg(f)*B - deg(f)*deg(g)*w_var
// whenever f, g are homogeneous of weights A, B under the same grading.
inline std::optional<OutputGrading> output_grading(const UniView& f, const UniView& g,
                                                   std::vector<long> w) {
  auto ff = fit_grading(f.base, f.var, w);
  auto gf = fit_grading(g.base, g.var, w);
  if (!ff.homogeneous || !gf.homogeneous) return std::nullopt;
  long wv = 0;
  if (ff.var_weight && gf.var_weight && *ff.var_weight != *gf.var_weight) return std::nullopt;
  if (ff.var_weight)
    wv = *ff.var_weight;
  else if (gf.var_weight)
    wv = *gf.var_weight;
  long a = ff.base_weight + wv * ff.var_exponent;
  long b = gf.base_weight + wv * gf.var_exponent;
  long m = f.degree(), n = g.degree();
  w[f.var] = wv;
  return OutputGrading{std::move(w), n * a + m * b - m * n * wv};
}

struct DenseUnivariate {
  std::vector<Integer> c;  // c[k] * t^k
};

// Polynomial that is constant except possibly in `var` -> dense coefficients.
inline DenseUnivariate to_dense(const Polynomial& p, std::size_t var) {
  DenseUnivariate out;
  int deg = degree_in(p, var);
  if (deg == kMinusInfinity) return out;
  out.c.assign(static_cast<std::size_t>(deg) + 1, Integer(0));
  for (const auto& t : p.terms()) out.c[t.mono[var]] = t.coeff;
  return out;
}

inline void horner(Integer& out, const DenseUnivariate& u, long x) {
  out = 0;
  for (std::size_t k = u.c.size(); k-- > 0;) {
    mpz_mul_si(out.get_mpz_t(), out.get_mpz_t(), x);
    out += u.c[k];
  }
}

class DenseResultant {
 public:
  DenseResultant(const UniView& f, const UniView& g, const ResultantOptions& opt)
      : f_(f), g_(g), opt_(opt), vars_(f.varset()) {}

  Polynomial run() {
    collect_support();
    compute_degree_bounds();
    choose_dehomogenization();

    // Set dehomogenized variables to 1 and keep only the box variables.
    Assignment ones;
    for (std::size_t v : dehom_) ones.emplace(v, Substitute{Integer(1)});
    std::vector<Polynomial> fc, gc;
    for (const auto& c : f_.coeffs) fc.push_back(specialize(c, ones));
    for (const auto& c : g_.coeffs) gc.push_back(specialize(c, ones));

    std::vector<std::size_t> dims;
    for (std::size_t v : box_) dims.push_back(static_cast<std::size_t>(bound_[v]) + 1);
    SampleGrid grid(dims.empty() ? std::vector<std::size_t>{1} : dims);

    if (box_.empty()) {
      grid.at(0) = leaf_value(fc, gc);
    } else if (box_.size() == 1) {
      fill_last_axis(fc, gc, grid, 0);
    } else {
      parallel_for(dims[0], opt_.threads, [&](std::size_t i) {
        Assignment a;
        a.emplace(box_[0], Substitute{Integer(interpolation_node(i))});
        std::vector<Polynomial> fs, gs;
        for (const auto& c : fc) fs.push_back(specialize(c, a));
        for (const auto& c : gc) gs.push_back(specialize(c, a));
        fill(1, fs, gs, grid, i * grid.stride(0));
      });
    }
    grid.to_coefficients();
    Polynomial res = assemble(grid);
    validate(res);
    return res;
  }

 private:
  void collect_support() {
    std::vector<bool> used(vars_->size(), false);
    for (const auto* view : {&f_, &g_})
      for (const auto& c : view->coeffs)
        for (std::size_t v : support_variables(c)) used[v] = true;
    used[f_.var] = false;
    for (std::size_t v = 0; v < used.size(); ++v)
      if (used[v]) support_.push_back(v);
  }

  void compute_degree_bounds() {
    bound_.assign(vars_->size(), 0);
    for (std::size_t v : support_) {
      std::vector<long> fd, gd;
      for (const auto& c : f_.coeffs) fd.push_back(c.is_zero() ? -1 : degree_in(c, v));
      for (const auto& c : g_.coeffs) gd.push_back(c.is_zero() ? -1 : degree_in(c, v));
      auto deg = sylvester_layout(fd, gd, -1L);
      bound_[v] = std::max(0L, max_permutation_degree(deg));
    }
  }

  void choose_dehomogenization() {
    std::vector<std::vector<long>> candidates;
    candidates.emplace_back(vars_->size(), 1L);
    std::vector<long> weighted(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) weighted[i] = vars_->weight(i);
    candidates.push_back(weighted);
    for (auto& c : candidates)
      if (auto og = output_grading(f_, g_, c)) gradings_.push_back(*og);

    auto cost = [&](std::size_t v) { return bound_[v] + 1; };
    if (gradings_.size() == 2) {
      const auto& w1 = gradings_[0].weights;
      const auto& w2 = gradings_[1].weights;
      long best = 0;
      std::optional<std::pair<std::size_t, std::size_t>> pick;
      for (std::size_t i = 0; i < support_.size(); ++i)
        for (std::size_t j = i + 1; j < support_.size(); ++j) {
          std::size_t p = support_[i], q = support_[j];
          if (w1[p] * w2[q] - w1[q] * w2[p] == 0) continue;
          long c = cost(p) * cost(q);
          if (!pick || c > best) {
            best = c;
            pick = std::make_pair(p, q);
          }
        }
      if (pick) {
        dehom_ = {pick->first, pick->second};
      } else {
        gradings_.resize(1);
      }
    }
    if (gradings_.size() == 1) {
      const auto& w = gradings_[0].weights;
      std::optional<std::size_t> pick;
      for (std::size_t v : support_)
        if (w[v] != 0 && (!pick || cost(v) > cost(*pick))) pick = v;
      if (pick)
        dehom_ = {*pick};
      else
        gradings_.clear();
    }
    for (std::size_t v : support_)
      if (std::find(dehom_.begin(), dehom_.end(), v) == dehom_.end()) box_.push_back(v);
  }

  Integer leaf_value(const std::vector<Polynomial>& fc, const std::vector<Polynomial>& gc) const {
    std::vector<Integer> fv, gv;
    for (const auto& c : fc) fv.push_back(c.is_zero() ? Integer(0) : c.constant_value());
    for (const auto& c : gc) gv.push_back(c.is_zero() ? Integer(0) : c.constant_value());
    return numeric_resultant(fv, gv);
  }

  void fill(std::size_t level, const std::vector<Polynomial>& fc,
            const std::vector<Polynomial>& gc, SampleGrid& grid, std::size_t offset) const {
    if (level + 1 == box_.size()) {
      fill_last_axis(fc, gc, grid, offset);
      return;
    }
    const std::size_t len = grid.dims()[level];
    std::vector<Polynomial> fs(fc.size()), gs(gc.size());
    for (std::size_t i = 0; i < len; ++i) {
      Assignment a;
      a.emplace(box_[level], Substitute{Integer(interpolation_node(i))});
      for (std::size_t j = 0; j < fc.size(); ++j) fs[j] = specialize(fc[j], a);
      for (std::size_t j = 0; j < gc.size(); ++j) gs[j] = specialize(gc[j], a);
      fill(level + 1, fs, gs, grid, offset + i * grid.stride(level));
    }
  }

  void fill_last_axis(const std::vector<Polynomial>& fc, const std::vector<Polynomial>& gc,
                      SampleGrid& grid, std::size_t offset) const {
    const std::size_t axis = box_.size() - 1;
    const std::size_t v = box_[axis];
    const std::size_t len = grid.dims()[axis];
    std::vector<DenseUnivariate> fu, gu;
    for (const auto& c : fc) fu.push_back(to_dense(c, v));
    for (const auto& c : gc) gu.push_back(to_dense(c, v));
    std::vector<Integer> fv(fc.size()), gv(gc.size());
    for (std::size_t i = 0; i < len; ++i) {
      long x = interpolation_node(i);
      for (std::size_t j = 0; j < fu.size(); ++j) horner(fv[j], fu[j], x);
      for (std::size_t j = 0; j < gu.size(); ++j) horner(gv[j], gu[j], x);
      grid.at(offset + i * grid.stride(axis)) = numeric_resultant(fv, gv);
    }
  }

  Polynomial assemble(const SampleGrid& grid) const {
    std::vector<Term> terms;
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
      if (grid.at(flat) == 0) continue;
      Monomial m;
      std::vector<std::size_t> idx = box_.empty() ? std::vector<std::size_t>{} : grid.unflatten(flat);
      for (std::size_t a = 0; a < box_.size(); ++a) m.set(box_[a], static_cast<unsigned>(idx[a]));
      solve_dehomogenized(m);
      terms.push_back({m, grid.at(flat)});
    }
    return Polynomial::from_terms(vars_, std::move(terms));
  }

  void solve_dehomogenized(Monomial& m) const {
    if (dehom_.empty()) return;
    auto residual = [&](const OutputGrading& g) {
      long r = g.degree;
      for (std::size_t v : box_) r -= g.weights[v] * m[v];
      return r;
    };
    auto bad = [] { throw InternalError("interpolated term is not compatible with the grading"); };
    if (dehom_.size() == 1) {
      long r = residual(gradings_[0]);
      long w = gradings_[0].weights[dehom_[0]];
      if (r % w != 0 || r / w < 0) bad();
      m.set(dehom_[0], static_cast<unsigned>(r / w));
      return;
    }
    const auto& w1 = gradings_[0].weights;
    const auto& w2 = gradings_[1].weights;
    std::size_t p = dehom_[0], q = dehom_[1];
    long r1 = residual(gradings_[0]), r2 = residual(gradings_[1]);
    long det = w1[p] * w2[q] - w1[q] * w2[p];
    long ep = r1 * w2[q] - w1[q] * r2;
    long eq = w1[p] * r2 - w2[p] * r1;
    if (ep % det != 0 || eq % det != 0 || ep / det < 0 || eq / det < 0) bad();
    m.set(p, static_cast<unsigned>(ep / det));
    m.set(q, static_cast<unsigned>(eq / det));
  }

  void validate(const Polynomial& res) const {
    std::mt19937_64 rng(opt_.validation_seed);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    std::vector<Integer> point(vars_->size(), Integer(0));
    for (unsigned k = 0; k < opt_.validation_points; ++k) {
      for (std::size_t v : support_) point[v] = dist(rng);
      std::vector<Integer> fv, gv;
      for (const auto& c : f_.coeffs) fv.push_back(c.evaluate(point));
      for (const auto& c : g_.coeffs) gv.push_back(c.evaluate(point));
      if (numeric_resultant(fv, gv) != res.evaluate(point))
        throw InternalError("interpolated resultant failed validation at a random point");
    }
  }

  const UniView& f_;
  const UniView& g_;
  ResultantOptions opt_;
  VarSetPtr vars_;
  std::vector<std::size_t> support_, box_, dehom_;
  std::vector<long> bound_;
  std::vector<OutputGrading> gradings_;
};

}  // namespace detail

// Res(f, g) in the remaining variables. Both strategies give identical results.
inline Polynomial resultant(const UniView& f, const UniView& g,
                            const ResultantOptions& opt = {}) {
  detail::require_compatible(f, g);
  if (f.is_zero() || g.is_zero()) {
    if (f.degree() < 1 && g.degree() < 1) throw UsageError("resultant: both polynomials are constant");
    return Polynomial(f.varset());
  }
  if (f.degree() < 1 && g.degree() < 1) throw UsageError("resultant: both polynomials are constant");
  if (opt.strategy == Strategy::direct) return det_fraction_free(sylvester(f, g));
  return detail::DenseResultant(f, g, opt).run();
}

inline Polynomial resultant(const UniView& f, const UniView& g, Strategy s) {
  ResultantOptions opt;
  opt.strategy = s;
  return resultant(f, g, opt);
}

// (-1)^{d(d-1)/2} Res(f, f') / lc(f); degree-1 input gives 1.
inline Polynomial discriminant(const UniView& f, const ResultantOptions& opt = {}) {
  int d = f.degree();
  if (d < 1) throw UsageError("discriminant: degree must be at least 1");
  if (d == 1) return Polynomial::constant(f.varset(), 1);
  UniView df = UniView::of(derivative(f.base, f.var), f.var);
  Polynomial r = exact_divide(resultant(f, df, opt), f.leading());
  return (d * (d - 1) / 2) % 2 == 1 ? -r : r;
}

// Discriminant of a polynomial of formal degree d = f.size() - 1, i.e. the
// generic degree-d discriminant evaluated at these coefficients. When the top
// coefficient vanishes: Disc_d(f_0..f_{d-1}, 0) = f_{d-1}^2 Disc_{d-1}(f_0..f_{d-1}),
// and the value is 0 once two or more top coefficients vanish.
inline Integer numeric_formal_discriminant(std::span<const Integer> f) {
  if (f.size() < 2) throw UsageError("formal discriminant: degree < 1");
  const std::size_t d = f.size() - 1;
  if (d == 1) return 1;
  if (f[d] != 0) return numeric_discriminant(f);
  if (f[d - 1] == 0) return 0;
  return f[d - 1] * f[d - 1] * numeric_discriminant(f.first(d));
}

inline Polynomial formal_discriminant(const std::vector<Polynomial>& coeffs, std::size_t var,
                                      const ResultantOptions& opt = {}) {
  if (coeffs.size() < 2) throw UsageError("formal discriminant: degree < 1");
  const VarSetPtr& vars = coeffs.front().varset();
  const std::size_t d = coeffs.size() - 1;
  if (d == 1) return Polynomial::constant(vars, 1);
  auto build = [&](std::size_t top) {
    Polynomial p(vars);
    for (std::size_t j = 0; j <= top; ++j) {
      Monomial m;
      m.set(var, static_cast<unsigned>(j));
      p += coeffs[j].scaled({m, Integer(1)});
    }
    return UniView::of(p, var);
  };
  if (!coeffs[d].is_zero()) return discriminant(build(d), opt);
  if (coeffs[d - 1].is_zero()) return Polynomial(vars);
  return coeffs[d - 1] * coeffs[d - 1] * discriminant(build(d - 1), opt);
}

}  // namespace ddisc

#endif  // DDISC_RESULTANT_HPP
