#ifndef DDISC_VARSET_HPP
#define DDISC_VARSET_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace ddisc {

// Packed monomials hold at most this many exponents.
inline constexpr std::size_t kMaxVars = 24;

// Ordered, immutable list of variable names with an integer weight per
// variable (used for quasi-homogeneous degrees).
class VarSet {
 public:
  VarSet(std::vector<std::string> names, std::vector<int> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
      throw UsageError("VarSet: names and weights differ in length");
    if (names_.size() > kMaxVars)
      throw UsageError("VarSet: at most " + std::to_string(kMaxVars) +
                       " variables supported");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw UsageError("VarSet: empty variable name");
      if (!seen.insert(n).second)
        throw UsageError("VarSet: duplicate variable '" + n + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }

  std::optional<std::size_t> find(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

  std::size_t index(const std::string& n) const {
    auto i = find(n);
    if (!i) throw UsageError("unknown variable '" + n + "'");
    return *i;
  }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Weight convention for named variables: a<i> weighs i, anything else 0.
inline int conventional_weight(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'a') {
    int w = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return 0;
      w = w * 10 + (name[i] - '0');
    }
    return w;
  }
  return 0;
}

inline VarSetPtr make_varset(std::vector<std::string> names) {
  std::vector<int> w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(conventional_weight(n));
  return std::make_shared<const VarSet>(std::move(names), std::move(w));
}

inline VarSetPtr make_varset(std::vector<std::string> names,
                             std::vector<int> weights) {
  return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  if (!same_varset(a, b)) throw UsageError("polynomials over different VarSets");
}

}  // namespace ddisc

#endif  // DDISC_VARSET_HPP
