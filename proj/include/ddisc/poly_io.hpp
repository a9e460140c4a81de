#ifndef DDISC_POLY_IO_HPP
#define DDISC_POLY_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

// Text format, one term per line in canonical (descending grevlex) order:
//
//   vars: x,a0,a1,a2
//   weights: 0,0,1,2        (optional; omitted when the naming convention applies)
//   -4 : 0,1,0,1
//
// Blank lines and lines starting with '#' are ignored.

namespace ddisc {

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline bool conventional_weights(const VarSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs.weight(i) != conventional_weight(vs.name(i))) return false;
  return true;
}

}  // namespace detail

inline void write_polynomial(std::ostream& os, const Polynomial& p) {
  const auto& vs = *p.varset();
  os << "vars: ";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs.name(i);
  os << '\n';
  if (!detail::conventional_weights(vs)) {
    os << "weights: ";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs.weight(i);
    os << '\n';
  }
  for (const auto& t : p.terms()) {
    os << t.coeff.get_str() << " : ";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << t.mono[i];
    os << '\n';
  }
}

inline std::string serialize(const Polynomial& p) {
  std::ostringstream os;
  write_polynomial(os, p);
  return os.str();
}

inline Polynomial read_polynomial(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  VarSetPtr vars;
  std::vector<std::string> names;
  std::vector<Term> terms;
  std::unordered_set<Monomial, MonomialHash> seen;
  bool weights_allowed = false;

  auto parse_uint = [&](const std::string& s) -> unsigned long {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a non-negative integer, got '" + s + "'", lineno);
    try {
      return std::stoul(s);
    } catch (const std::exception&) {
      throw ParseError("integer out of range '" + s + "'", lineno);
    }
  };

  while (std::getline(is, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;

    if (!vars && names.empty()) {
      if (t.rfind("vars:", 0) != 0) throw ParseError("expected 'vars:' header", lineno);
      std::string body = detail::trim(t.substr(5));
      names = body.empty() ? std::vector<std::string>{} : detail::split(body, ',');
      try {
        vars = make_varset(names);
      } catch (const UsageError& e) {
        throw ParseError(e.what(), lineno);
      }
      weights_allowed = true;
      continue;
    }

    if (weights_allowed && t.rfind("weights:", 0) == 0) {
      auto parts = detail::split(detail::trim(t.substr(8)), ',');
      if (parts.size() != names.size()) throw ParseError("weights length mismatch", lineno);
      std::vector<int> w;
      for (const auto& s : parts) {
        try {
          std::size_t used = 0;
          w.push_back(std::stoi(s, &used));
          if (used != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
          throw ParseError("bad weight '" + s + "'", lineno);
        }
      }
      vars = make_varset(names, std::move(w));
      weights_allowed = false;
      continue;
    }
    weights_allowed = false;

    auto colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'coeff : exponents'", lineno);
    std::string cstr = detail::trim(t.substr(0, colon));
    Integer c;
    if (cstr.empty() || c.set_str(cstr, 10) != 0) throw ParseError("bad coefficient '" + cstr + "'", lineno);
    if (c == 0) throw ParseError("zero coefficient", lineno);

    auto exps = detail::split(detail::trim(t.substr(colon + 1)), ',');
    if (exps.size() != vars->size() && !(vars->size() == 0 && exps.size() == 1 && exps[0].empty()))
      throw ParseError("expected " + std::to_string(vars->size()) + " exponents", lineno);
    Monomial m;
    for (std::size_t i = 0; i < vars->size(); ++i) {
      auto e = parse_uint(exps[i]);
      if (e > 65535) throw ParseError("exponent too large", lineno);
      m.set(i, static_cast<unsigned>(e));
    }
    if (!seen.insert(m).second) throw ParseError("duplicate monomial", lineno);
    terms.push_back({m, c});
  }
  if (!vars) throw ParseError("missing 'vars:' header", lineno + 1);
  return Polynomial::from_terms(vars, std::move(terms));
}

inline Polynomial parse_polynomial(const std::string& text) {
  std::istringstream is(text);
  return read_polynomial(is);
}

inline Polynomial load_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_polynomial(in);
}

}  // namespace ddisc

#endif  // DDISC_POLY_IO_HPP
