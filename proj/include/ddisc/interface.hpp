#ifndef DDISC_INTERFACE_HPP
#define DDISC_INTERFACE_HPP

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "checks.hpp"
#include "content.hpp"
#include "double_disc.hpp"
#include "factorization.hpp"
#include "generic_family.hpp"
#include "poly_io.hpp"
#include "report.hpp"

namespace ddisc {

inline constexpr int kReportVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

struct RunConfig {
  std::string command;
  int n = 0;
  int k = -1;  // -1: every relevant k
  int n_max = 5;
  int bound_max = 0;
  std::string suite = "all";
  std::string cache_dir;
  std::uint64_t seed = kDefaultSeed;
  std::string strategy = "interpolate";
  unsigned long prime_bound = kDefaultPrimeBound;
  unsigned trials = 100;
  std::string format = "text";
  unsigned threads = 1;
  bool verbose = false;
  std::string out;

  Json to_json() const {
    return Json{{"command", command},     {"n", n},
                {"k", k},                 {"n_max", n_max},
                {"bound_max", bound_max}, {"suite", suite},
                {"cache_dir", cache_dir}, {"seed", seed},
                {"strategy", strategy},   {"prime_bound", prime_bound},
                {"trials", trials},       {"format", format},
                {"threads", threads},     {"verbose", verbose},
                {"out", out}};
  }

  Strategy resultant_strategy() const {
    return strategy == "direct" ? Strategy::direct : Strategy::interpolate;
  }
};

// Fixed-width grid in the layout of the content table: rows n, columns
// k = 0..n/2. Upper bounds carry a trailing '|' (c divides the entry), lower
// bounds a leading '>='.
inline std::string table_render(const std::vector<ContentRecord>& records) {
  std::map<int, std::map<int, std::string>> cells;
  int max_k = -1;
  bool any_ub = false, any_lb = false;
  for (const auto& r : records) {
    std::string v = r.inconclusive ? "?" : r.value.to_string();
    if (r.kind == ContentKind::upper_bound) {
      v += " |";
      any_ub = true;
    } else if (r.kind == ContentKind::lower_bound) {
      v = ">= " + v;
      any_lb = true;
    }
    cells[r.n][r.k] = v;
    max_k = std::max(max_k, r.k);
  }
  std::size_t width = 6;
  for (const auto& [n, row] : cells)
    for (const auto& [k, v] : row) width = std::max(width, v.size() + 2);
  std::ostringstream os;
  auto pad = [&](const std::string& s) { return s + std::string(width - std::min(width, s.size()), ' '); };
  auto emit = [&](std::string row) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    os << row << "\n";
  };
  std::string header = "n\\k   ";
  for (int k = 0; k <= max_k; ++k) header += pad("k=" + std::to_string(k));
  emit(header);
  for (const auto& [n, row] : cells) {
    std::string line = std::to_string(n);
    line += std::string(6 - line.size(), ' ');
    for (int k = 0; k <= max_k; ++k) {
      auto it = row.find(k);
      line += pad(it == row.end() ? "" : it->second);
    }
    emit(line);
  }
  if (any_ub) os << "entries ending in '|' are upper bounds: c_{n,k} divides them\n";
  if (any_lb) os << "entries starting with '>=' are guaranteed powers of two dividing c_{n,k}\n";
  return os.str();
}

// parse -> serialize -> parse; throws ParseError on malformed input and
// InternalError if the second parse or the bytes differ.
inline Polynomial poly_roundtrip(const std::string& path) {
  Polynomial p = load_polynomial(path);
  std::string text = serialize(p);
  Polynomial q = parse_polynomial(text);
  if (!(q == p) || serialize(q) != text) throw InternalError("poly_roundtrip: not the identity");
  return q;
}

// Writes report lines in text or JSONL form. The JSONL stream opens with the
// RunConfig and closes with a summary; every line carries the version.
class Emitter {
 public:
  Emitter(std::ostream& os, const RunConfig& cfg) : os_(os), jsonl_(cfg.format == "jsonl") {
    if (jsonl_) line(Json{{"type", "config"}, {"config", cfg.to_json()}});
  }

  void check(const CheckRecord& r) {
    report_.add(r);
    if (jsonl_) {
      Json j{{"type", "check"}};
      j.update(r.to_json());
      line(std::move(j));
    } else {
      os_ << to_string(r.verdict) << "  " << r.id << " " << r.inputs.dump() << "  " << r.detail;
      if (r.seed) os_ << "  [seed " << *r.seed << "]";
      os_ << "\n";
    }
  }

  void checks(const Report& rep) {
    for (const auto& r : rep.records) check(r);
  }

  // A computed artefact (polynomial, table, timing) rather than a verdict.
  void result(const std::string& kind, Json fields, const std::string& text) {
    if (jsonl_) {
      Json j{{"type", "result"}, {"kind", kind}};
      j.update(fields);
      line(std::move(j));
    } else {
      os_ << text;
      if (!text.empty() && text.back() != '\n') os_ << "\n";
    }
  }

  void error(const std::string& kind, const std::string& message) {
    errors_.push_back(kind);
    if (jsonl_)
      line(Json{{"type", "error"}, {"kind", kind}, {"message", message}});
    else
      os_ << "ERROR (" << kind << "): " << message << "\n";
  }

  void finish() {
    if (jsonl_) {
      line(Json{{"type", "summary"},
                {"checks", report_.records.size()},
                {"pass", report_.count(Verdict::pass)},
                {"fail", report_.count(Verdict::fail)},
                {"consistent", report_.count(Verdict::consistent)},
                {"inconsistent", report_.count(Verdict::inconsistent)},
                {"undecided", report_.count(Verdict::undecided)},
                {"errors", errors_.size()}});
    } else if (!report_.records.empty()) {
      os_ << "summary: " << report_.records.size() << " checks, " << report_.count(Verdict::pass)
          << " pass, " << report_.count(Verdict::fail) << " fail, "
          << report_.count(Verdict::consistent) << " consistent, "
          << report_.count(Verdict::inconsistent) << " inconsistent, "
          << report_.count(Verdict::undecided) << " undecided\n";
    }
  }

  const Report& report() const { return report_; }

 private:
  void line(Json j) {
    Json out{{"version", kReportVersion}};
    out.update(j);
    os_ << out.dump() << "\n";
  }

  std::ostream& os_;
  bool jsonl_;
  Report report_;
  std::vector<std::string> errors_;
};

namespace detail {

inline DoubleDiscOptions dd_options(const RunConfig& cfg, std::ostream& err) {
  DoubleDiscOptions o;
  o.strategy = cfg.resultant_strategy();
  o.threads = cfg.threads;
  o.cache_dir = cfg.cache_dir;
  // Corrupt cache entries are always reported; progress only when verbose.
  bool verbose = cfg.verbose;
  o.log = [&err, verbose](const std::string& s) {
    if (verbose || s.find("rejected") != std::string::npos) err << "ddisc: " << s << "\n";
  };
  return o;
}

inline std::vector<int> ks_for(const RunConfig& cfg, int n, bool half) {
  if (cfg.k >= 0) return {cfg.k};
  std::vector<int> ks;
  for (int k = 0; half ? 2 * k <= n : k <= n; ++k) ks.push_back(k);
  return ks;
}

inline void cmd_disc(const RunConfig& cfg, Emitter& em) {
  if (cfg.n < 2) throw UsageError("disc: --n must be at least 2");
  auto d = generic_disc(cfg.n);
  em.result("disc", Json{{"n", cfg.n}, {"terms", d.size()}, {"polynomial", serialize(d)}},
            serialize(d));
}

inline void cmd_ddisc(const RunConfig& cfg, Emitter& em, std::ostream& err) {
  if (cfg.k < 0) throw UsageError("ddisc: --k is required");
  auto res = double_disc_ex(cfg.n, cfg.k, dd_options(cfg, err));
  if (!res.corruption.empty()) em.error("cache_corruption", res.cache_path + ": " + res.corruption);
  if (cfg.verbose)
    err << "ddisc: DD_{" << cfg.n << "," << cfg.k << "} " << to_string(res.source) << " in "
        << res.seconds << " s\n";
  std::string text = serialize(res.dd);
  if (!cfg.out.empty()) detail::write_atomically(cfg.out, text);
  auto dg = degrees(res.dd);
  Json fields{{"n", cfg.n}, {"k", cfg.k}, {"terms", res.dd.size()}, {"total_degree", dg.total},
              {"weighted_degree", dg.weighted}};
  if (cfg.out.empty())
    fields["polynomial"] = text;
  else
    fields["written_to"] = cfg.out;
  em.result("ddisc", fields,
            cfg.out.empty() ? text
                            : "DD_{" + std::to_string(cfg.n) + "," + std::to_string(cfg.k) + "}: " +
                                  std::to_string(res.dd.size()) + " terms written to " + cfg.out);
}

inline void cmd_factor(const RunConfig& cfg, Emitter& em, std::ostream& err) {
  auto dd = double_disc(cfg.n, 0, dd_options(cfg, err));
  auto f = factor_dd0(cfg.n, dd);
  em.check(factor_record(f));
  em.check(b_formula_record(b_formula_check(cfg.n, f.B, cfg.trials, cfg.seed), cfg.seed));
  em.result("factorization",
            Json{{"n", cfg.n}, {"c", f.c.get_str()}, {"A", serialize(f.A)}, {"B", serialize(f.B)}},
            "c = " + f.c.get_str() + "\nA = " + f.A.to_string() + "\nB = " + f.B.to_string());
}

inline Json content_fields(const ContentRecord& r) { return content_json(r); }

inline std::string content_line(const ContentRecord& r) {
  return "c_{" + std::to_string(r.n) + "," + std::to_string(r.k) + "} " +
         (r.kind == ContentKind::exact ? "= " : r.kind == ContentKind::upper_bound ? "divides " : "is divisible by ") +
         (r.inconclusive ? "? (every specialization degenerate)" : r.value.to_string()) + "  (" + r.method + ")";
}

inline void cmd_content(const RunConfig& cfg, Emitter& em, std::ostream& err) {
  auto opt = dd_options(cfg, err);
  for (int k : ks_for(cfg, cfg.n, true)) {
    auto rec = content_exact(cfg.n, k, double_disc(cfg.n, k, opt), cfg.prime_bound);
    em.result("content", content_fields(rec), content_line(rec));
    em.checks(divisibility_report(rec, 0, cfg.seed, cfg.threads));
  }
}

inline void cmd_bound(const RunConfig& cfg, Emitter& em) {
  for (int k : ks_for(cfg, cfg.n, true)) {
    auto lb = content_lower_bound(cfg.n, k);
    em.result("content", content_fields(lb), content_line(lb));
    ResultantOptions ropt;
    ropt.strategy = Strategy::interpolate;
    ropt.threads = cfg.threads;
    auto ub = content_upper_bound(cfg.n, k, compressed_portfolio(cfg.n, k, 2, cfg.seed),
                                  cfg.prime_bound, ropt);
    em.result("content", content_fields(ub), content_line(ub));
    em.checks(divisibility_report(ub, cfg.trials, cfg.seed, cfg.threads));
  }
}

inline void cmd_table(const RunConfig& cfg, Emitter& em, std::ostream& err) {
  std::vector<ContentRecord> recs;
  auto opt = dd_options(cfg, err);
  for (int n = 3; n <= cfg.n_max; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      recs.push_back(content_exact(n, k, double_disc(n, k, opt), cfg.prime_bound));
  for (int n = std::max(3, cfg.n_max + 1); n <= cfg.bound_max; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      recs.push_back(content_upper_bound(n, k, compressed_portfolio(n, k, 2, cfg.seed), cfg.prime_bound));
  Json rows = Json::array();
  for (const auto& r : recs) rows.push_back(content_fields(r));
  em.result("table", Json{{"entries", rows}}, table_render(recs));
}

inline void cmd_bench(const RunConfig& cfg, Emitter& em) {
  auto time = [](auto&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto v = f();
    return std::make_pair(std::move(v),
                          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  for (int k : ks_for(cfg, cfg.n, true)) {
    std::map<std::string, std::pair<Polynomial, double>> runs;
    for (const char* s : {"direct", "interpolate"}) {
      DoubleDiscOptions o;
      o.use_env_cache = false;
      o.threads = cfg.threads;
      o.strategy = std::string(s) == "direct" ? Strategy::direct : Strategy::interpolate;
      runs.emplace(s, time([&] { return double_disc(cfg.n, k, o); }));
    }
    auto& d = runs.at("direct");
    auto& i = runs.at("interpolate");
    std::ostringstream text;
    text << "DD_{" << cfg.n << "," << k << "}: " << d.first.size() << " terms; direct "
         << d.second << " s, interpolate " << i.second << " s";
    em.result("bench",
              Json{{"n", cfg.n}, {"k", k}, {"terms", d.first.size()},
                   {"direct_seconds", d.second}, {"interpolate_seconds", i.second}},
              text.str());
    auto rec = CheckRecord::make("bench.agreement", Json{{"n", cfg.n}, {"k", k}});
    rec.verdict = d.first == i.first ? Verdict::pass : Verdict::fail;
    rec.detail = rec.verdict == Verdict::pass ? "strategies agree" : "strategies disagree";
    em.check(rec);
  }
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"degrees", "oracle",  "factor", "vanishing",
                                              "witness", "content", "probe",  "roots"};
  return names;
}

inline void cmd_verify(const RunConfig& cfg, Emitter& em, std::ostream& err) {
  auto want = [&](const std::string& s) { return cfg.suite == "all" || cfg.suite == s; };
  if (cfg.n_max < 3) throw UsageError("verify: --n-max must be at least 3");
  auto opt = dd_options(cfg, err);
  std::map<std::pair<int, int>, Polynomial> dds;
  auto dd = [&](int n, int k) -> const Polynomial& {
    auto it = dds.find({n, k});
    if (it == dds.end()) it = dds.emplace(std::pair{n, k}, double_disc(n, k, opt)).first;
    return it->second;
  };
  const int N = cfg.n_max;
  const std::uint64_t seed = cfg.seed;

  if (want("degrees")) {
    for (int n = 2; n <= N; ++n) em.check(disc_property_record(n, generic_disc(n)));
    for (int n = 3; n <= N; ++n)
      for (int k = 0; k <= n; ++k) em.check(dd_property_record(n, k, dd(n, k), &dd(n, n - k), seed));
  }
  if (want("oracle"))
    for (int n = 3; n <= N; ++n)
      em.check(n <= 4 ? oracle_symbolic_record(n, dd(n, 0))
                      : oracle_sampled_record(n, cfg.trials, seed, cfg.threads));
  std::optional<FactorizationReport> f4;
  if (want("factor") || want("witness") || want("roots")) {
    for (int n = 3; n <= std::min(N, 5); ++n) {
      if (n != 4 && !want("factor")) continue;
      auto f = factor_dd0(n, dd(n, 0));
      if (want("factor")) {
        em.check(factor_record(f));
        em.check(b_formula_record(b_formula_check(n, f.B, cfg.trials, seed), seed));
      }
      if (n == 4) f4 = f;
    }
  }
  if (want("vanishing"))
    for (int n = 3; n <= N; ++n)
      for (int k = 0; k <= n; ++k) {
        VanishingOptions vo;
        vo.trials = cfg.trials;
        vo.seed = seed;
        vo.dd = &dd(n, k);
        em.checks(vanishing_checks(n, k, vo));
      }
  if (want("witness") && N >= 4) em.checks(witness_report(seed, f4 ? &*f4 : nullptr));
  if (want("content"))
    for (int n = 3; n <= N; ++n)
      for (int k = 0; 2 * k <= n; ++k) {
        auto rec = content_exact(n, k, dd(n, k), cfg.prime_bound);
        em.result("content", content_fields(rec), content_line(rec));
        em.checks(divisibility_report(rec, cfg.trials, seed, cfg.threads));
      }
  if (want("probe"))
    for (int n = 3; n <= N; ++n)
      for (int k = 1; 2 * k <= n; ++k)
        em.check(probe_record(structure_probe(n, k, cfg.trials, seed, cfg.threads), seed));
  if (want("roots") && f4)
    em.check(roots_record(roots_expression_check(f4->B, std::max(cfg.trials, 50u), seed), seed));
}

}  // namespace detail

// Parses argv (without the program name) and runs one command. Exit status:
// 0 success, 1 a checked claim failed, 2 usage or input error, 3 internal.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"double discriminant toolkit", "ddisc"};
  app.require_subcommand(1, 1);
  std::vector<std::string> strategies{"direct", "interpolate"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default $" + std::string(kCacheEnv) + ")");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--strategy", cfg.strategy, "resultant strategy")
        ->check(CLI::IsMember(strategies));
    sub->add_option("--prime-bound", cfg.prime_bound, "trial division bound")->check(CLI::Range(2ul, 1ul << 30));
    sub->add_option("--trials", cfg.trials, "trials per randomized check");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "jsonl"}));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--verbose,-v", cfg.verbose, "progress on stderr");
  };
  auto with_n = [&](CLI::App* sub, bool need_k) {
    sub->add_option("--n", cfg.n, "degree")->required()->check(CLI::Range(2, 64));
    auto* k = sub->add_option("--k", cfg.k, "coefficient index")->check(CLI::Range(0, 64));
    if (need_k) k->required();
  };

  auto* disc = app.add_subcommand("disc", "print D_n");
  with_n(disc, false);
  common(disc);
  auto* dd = app.add_subcommand("ddisc", "compute DD_{n,k}");
  with_n(dd, true);
  dd->add_option("--out", cfg.out, "write the polynomial to this file");
  common(dd);
  auto* factor = app.add_subcommand("factor", "factor DD_{n,0} as c A^3 B^2");
  with_n(factor, false);
  common(factor);
  auto* content = app.add_subcommand("content", "exact content c_{n,k}");
  with_n(content, false);
  common(content);
  auto* bound = app.add_subcommand("bound", "upper and lower bounds on c_{n,k}");
  with_n(bound, false);
  common(bound);
  auto* verify = app.add_subcommand("verify", "run check suites");
  std::vector<std::string> suites{"all"};
  for (const auto& s : detail::suite_names()) suites.push_back(s);
  verify->add_option("--suite", cfg.suite, "suite")->check(CLI::IsMember(suites));
  verify->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::Range(3, 64));
  common(verify);
  auto* table = app.add_subcommand("table", "content table");
  table->add_option("--n-max", cfg.n_max, "largest n with exact content")->check(CLI::Range(2, 64));
  table->add_option("--bound-max", cfg.bound_max, "largest n with upper bounds")->check(CLI::Range(0, 64));
  common(table);
  auto* bench = app.add_subcommand("bench", "time direct vs interpolate");
  with_n(bench, false);
  common(bench);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Emitter em(out, cfg);
  int status = kExitOk;
  try {
    if (cfg.command == "disc") detail::cmd_disc(cfg, em);
    else if (cfg.command == "ddisc") detail::cmd_ddisc(cfg, em, err);
    else if (cfg.command == "factor") detail::cmd_factor(cfg, em, err);
    else if (cfg.command == "content") detail::cmd_content(cfg, em, err);
    else if (cfg.command == "bound") detail::cmd_bound(cfg, em);
    else if (cfg.command == "verify") detail::cmd_verify(cfg, em, err);
    else if (cfg.command == "table") detail::cmd_table(cfg, em, err);
    else if (cfg.command == "bench") detail::cmd_bench(cfg, em);
  } catch (const FalsificationError& e) {
    em.error("falsification", e.what());
    status = kExitFalsified;
  } catch (const UsageError& e) {
    em.error("usage", e.what());
    em.finish();
    return kExitUsage;
  } catch (const std::exception& e) {
    em.error("internal", e.what());
    em.finish();
    return kExitInternal;
  }
  em.finish();
  if (em.report().any_failure()) status = kExitFalsified;
  return status;
}

}  // namespace ddisc

#endif  // DDISC_INTERFACE_HPP
