#ifndef DDISC_REPORT_HPP
#define DDISC_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ddisc {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, consistent, inconsistent, undecided, skipped, info };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::consistent: return "CONSISTENT";
    case Verdict::inconsistent: return "INCONSISTENT";
    case Verdict::undecided: return "UNDECIDED";
    case Verdict::skipped: return "SKIPPED";
    case Verdict::info: return "INFO";
  }
  return "?";
}

// Failing verdicts: a theorem check failed or a conjecture met a counterexample.
inline bool is_failure(Verdict v) { return v == Verdict::fail || v == Verdict::inconsistent; }

// One record per check: what was checked, on which inputs, with what outcome.
struct CheckRecord {
  std::string id;
  Json inputs = Json::object();
  Verdict verdict = Verdict::info;
  std::string detail;
  Json witness = Json::object();
  std::optional<std::uint64_t> seed;

  static CheckRecord make(std::string id, Json inputs) {
    CheckRecord r;
    r.id = std::move(id);
    r.inputs = std::move(inputs);
    return r;
  }

  Json to_json() const {
    Json j;
    j["id"] = id;
    j["inputs"] = inputs;
    j["verdict"] = to_string(verdict);
    j["detail"] = detail;
    j["witness"] = witness;
    if (seed) j["seed"] = *seed;
    return j;
  }
};

struct Report {
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const Report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }
  bool any_failure() const {
    for (const auto& r : records)
      if (is_failure(r.verdict)) return true;
    return false;
  }
  std::size_t count(Verdict v) const {
    std::size_t c = 0;
    for (const auto& r : records) c += r.verdict == v;
    return c;
  }
};

}  // namespace ddisc

#endif  // DDISC_REPORT_HPP
