#ifndef DDISC_DOUBLE_DISC_HPP
#define DDISC_DOUBLE_DISC_HPP

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "generic_family.hpp"
#include "poly_io.hpp"
#include "resultant.hpp"

namespace ddisc {

inline constexpr const char* kCacheEnv = "DDISC_CACHE_DIR";

struct DoubleDiscOptions {
  Strategy strategy = Strategy::interpolate;
  unsigned threads = 1;
  // Empty: use $DDISC_CACHE_DIR if set, otherwise no disk cache.
  std::string cache_dir;
  bool use_env_cache = true;
  std::function<void(const std::string&)> log;
};

inline std::optional<std::filesystem::path> resolve_cache_dir(const DoubleDiscOptions& opt) {
  if (!opt.cache_dir.empty()) return std::filesystem::path(opt.cache_dir);
  if (opt.use_env_cache)
    if (const char* env = std::getenv(kCacheEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

inline void check_dd_args(int n, int k) {
  if (n == 2) throw UsageError("double_disc: n = 2 is degenerate");
  if (n < 3) throw UsageError("double_disc: n must be at least 3");
  if (k < 0 || k > n) throw UsageError("double_disc: k must lie in [0, n]");
}

struct DdDegrees {
  long total;
  long weighted;
};

inline DdDegrees expected_dd_degrees(int n, int k) {
  long tot = (k == 0 || k == n) ? long(3 * n - 6) * (n - 1) : long(3 * n - 4) * (n - 1);
  long wt = k == 0 ? long(n) * (n - 1) * (2 * n - 4) : long(n) * (n - 1) * (2 * n - k - 2);
  return {tot, wt};
}

// Empty string when DD has the expected homogeneous and weighted degrees.
inline std::string dd_degree_violation(const Polynomial& dd, int n, int k) {
  auto want = expected_dd_degrees(n, k);
  auto got = degrees(dd);
  std::ostringstream os;
  if (got.is_zero) return "DD is identically zero";
  if (!got.homogeneous || got.total != want.total)
    os << "total degree " << got.total << (got.homogeneous ? "" : " (inhomogeneous)")
       << ", expected " << want.total << "; ";
  if (!got.quasi_homogeneous || got.weighted != want.weighted)
    os << "weighted degree " << got.weighted << (got.quasi_homogeneous ? "" : " (not quasi-homogeneous)")
       << ", expected " << want.weighted << "; ";
  if (degree_in(dd, static_cast<std::size_t>(k)) > 0) os << "a" << k << " still present; ";
  return os.str();
}

// Numeric DD_{n,k}: values[i] is a_i (values[k] ignored). D_n restricted to
// the line through the point in the a_k direction is recovered by sampling
// the formal discriminant, then its own formal discriminant is taken.
class DoubleDiscEvaluator {
 public:
  DoubleDiscEvaluator(int n, int k) : n_(n), k_(k) { check_dd_args(n, k); }

  // Coefficients of D_n(a_k = t) in t, of formal degree deg_{a_k} D_n.
  std::vector<Integer> disc_in_ak(std::span<const Integer> values) const {
    if (values.size() != static_cast<std::size_t>(n_) + 1)
      throw UsageError("DoubleDiscEvaluator: expected n+1 values");
    const std::size_t d = static_cast<std::size_t>(disc_degree_in(n_, k_));
    std::vector<Integer> c(values.begin(), values.end());
    std::vector<Integer> samples(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      c[k_] = interpolation_node(i);
      samples[i] = numeric_formal_discriminant(c);
    }
    std::vector<Integer*> line;
    for (auto& s : samples) line.push_back(&s);
    std::vector<Integer> scratch;
    newton_to_monomial(line, scratch);
    return samples;
  }

  Integer operator()(std::span<const Integer> values) const {
    return numeric_formal_discriminant(disc_in_ak(values));
  }

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_, k_;
};

// DD with some coefficients fixed to integers and the rest symbolic.
// fixed[i] set means a_i is specialized; a_k must stay symbolic. Uses the
// formal-degree identity so specialization commutes with disc_{a_k}.
inline Polynomial specialized_double_disc(int n, int k,
                                          const std::vector<std::optional<Integer>>& fixed,
                                          const ResultantOptions& ropt = {}) {
  check_dd_args(n, k);
  if (fixed.size() != static_cast<std::size_t>(n) + 1)
    throw UsageError("specialized_double_disc: expected n+1 entries");
  if (fixed[k]) throw UsageError("specialized_double_disc: a_k must stay symbolic");
  Assignment a;
  for (int i = 0; i <= n; ++i)
    if (fixed[i]) a.emplace(static_cast<std::size_t>(i), Substitute{*fixed[i]});
  Polynomial dspec = specialize(generic_disc(n), a);
  auto coeffs = coefficients_in(dspec, static_cast<std::size_t>(k));
  const std::size_t d = static_cast<std::size_t>(disc_degree_in(n, k));
  if (coeffs.empty()) return Polynomial(dspec.varset());
  coeffs.resize(d + 1, Polynomial(dspec.varset()));
  return formal_discriminant(coeffs, static_cast<std::size_t>(k), ropt);
}

// Cache file name for DD_{n,k}.
inline std::string dd_cache_name(int n, int k) {
  return "dd_n" + std::to_string(n) + "_k" + std::to_string(k) + ".poly";
}

enum class DdSource { computed, cache, recomputed_after_corruption };

inline const char* to_string(DdSource s) {
  switch (s) {
    case DdSource::computed: return "computed";
    case DdSource::cache: return "cache";
    case DdSource::recomputed_after_corruption: return "recomputed-after-corruption";
  }
  return "?";
}

struct DoubleDiscResult {
  Polynomial dd;
  DdSource source = DdSource::computed;
  std::string cache_path;
  std::string corruption;  // why a cached file was rejected, if it was
  double seconds = 0;
};

// Checks a candidate DD_{n,k} against its degree formulas and against the
// numeric evaluator at a few seeded points. Empty string means valid.
inline std::string validate_dd(const Polynomial& dd, int n, int k, unsigned points = 4) {
  if (!same_varset(dd.varset(), coefficient_vars(n))) return "unexpected variable set";
  if (auto v = dd_degree_violation(dd, n, k); !v.empty()) return v;
  DoubleDiscEvaluator ev(n, k);
  std::mt19937_64 rng(0xcace + 31 * n + k);
  std::uniform_int_distribution<long> dist(-50, 50);
  std::vector<Integer> pt(n + 1);
  for (unsigned i = 0; i < points; ++i) {
    for (auto& v : pt) v = dist(rng);
    pt[k] = 0;
    if (dd.evaluate(pt) != ev(pt)) return "value mismatch at a validation point";
  }
  return {};
}

namespace detail {

inline Polynomial compute_double_disc(int n, int k, const DoubleDiscOptions& opt) {
  Polynomial d = generic_disc(n);
  auto view = UniView::of(d, static_cast<std::size_t>(k));
  ResultantOptions ropt;
  ropt.strategy = opt.strategy;
  ropt.threads = opt.threads;
  Polynomial dd = discriminant(view, ropt);
  if (auto v = dd_degree_violation(dd, n, k); !v.empty())
    throw FalsificationError("DD_{" + std::to_string(n) + "," + std::to_string(k) +
                             "} violates its degree formulas: " + v);
  return dd;
}

inline void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(path.string()) ^
                                 std::chrono::steady_clock::now().time_since_epoch().count());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

// DD_{n,k} over a0..an (a_k absent from the support). Served from the disk
// cache when a valid entry exists; a cached entry that fails validation is
// reported in the result and replaced.
inline DoubleDiscResult double_disc_ex(int n, int k, const DoubleDiscOptions& opt = {}) {
  check_dd_args(n, k);
  auto log = [&](const std::string& s) {
    if (opt.log) opt.log(s);
  };
  DoubleDiscResult res;
  auto t0 = std::chrono::steady_clock::now();
  auto dir = resolve_cache_dir(opt);
  std::filesystem::path path;
  if (dir) {
    path = *dir / dd_cache_name(n, k);
    res.cache_path = path.string();
    if (std::filesystem::exists(path)) {
      std::string why;
      try {
        Polynomial cached = load_polynomial(path.string());
        if (!same_varset(cached.varset(), coefficient_vars(n)))
          why = "unexpected variable set";
        else
          why = validate_dd(rebase(cached, coefficient_vars(n)), n, k);
        if (why.empty()) {
          res.dd = rebase(cached, coefficient_vars(n));
          res.source = DdSource::cache;
          res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          log("DD_{" + std::to_string(n) + "," + std::to_string(k) + "} loaded from " + res.cache_path);
          return res;
        }
      } catch (const std::exception& e) {
        why = e.what();
      }
      res.corruption = why;
      log("cache entry " + res.cache_path + " rejected: " + why);
    }
  }
  log("computing DD_{" + std::to_string(n) + "," + std::to_string(k) + "}");
  res.dd = detail::compute_double_disc(n, k, opt);
  res.source = res.corruption.empty() ? DdSource::computed : DdSource::recomputed_after_corruption;
  if (dir) detail::write_atomically(path, serialize(res.dd));
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline Polynomial double_disc(int n, int k, const DoubleDiscOptions& opt = {}) {
  return double_disc_ex(n, k, opt).dd;
}

// Renames a_i <-> a_{n-i}.
inline Polynomial reverse_coefficients(const Polynomial& p, int n) {
  std::vector<std::size_t> perm(p.varset()->size());
  for (int i = 0; i <= n; ++i) perm[i] = static_cast<std::size_t>(n - i);
  return permute_variables(p, perm);
}

// DD_{n,n-k}(a) = DD_{n,k}(reversed a).
inline bool reversal_check(const Polynomial& dd_k, const Polynomial& dd_nk, int n) {
  return reverse_coefficients(dd_k, n) == dd_nk;
}

inline bool reversal_check(int n, int k, const DoubleDiscOptions& opt = {}) {
  return reversal_check(double_disc(n, k, opt), double_disc(n, n - k, opt), n);
}

// Numeric form on seeded random points, for degrees beyond symbolic reach.
inline bool reversal_check_sampled(int n, int k, unsigned trials, std::uint64_t seed) {
  DoubleDiscEvaluator e1(n, k), e2(n, n - k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-50, 50);
  std::vector<Integer> pt(n + 1), rev(n + 1);
  for (unsigned t = 0; t < trials; ++t) {
    for (auto& v : pt) v = dist(rng);
    for (int i = 0; i <= n; ++i) rev[i] = pt[n - i];
    if (e1(rev) != e2(pt)) return false;
  }
  return true;
}

}  // namespace ddisc

#endif  // DDISC_DOUBLE_DISC_HPP
