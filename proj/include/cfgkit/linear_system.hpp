// Copyright 2026 The cfgkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CFGKIT_LINEAR_SYSTEM_HPP
#define CFGKIT_LINEAR_SYSTEM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cfgkit/errors.hpp"
#include "cfgkit/poset.hpp"

namespace cfgkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Variable of an inequality system: either the threshold w of system m
/// (written w[m]) or the edge weight e_x of system m (written e[x->m]).
struct VarId {
  enum class Kind { W, E };

  Kind kind = Kind::W;
  ElementId source;  // x for E, empty for W
  ElementId target;  // m

  static VarId w(ElementId m) { return {Kind::W, {}, std::move(m)}; }
  static VarId e(ElementId x, ElementId m) {
    if (x == m) throw PreconditionError("variable e[" + x + "->" + m + "] would be a self-edge");
    return {Kind::E, std::move(x), std::move(m)};
  }

  bool is_w() const { return kind == Kind::W; }
  std::string str() const { return is_w() ? "w[" + target + "]" : "e[" + source + "->" + target + "]"; }

  auto operator<=>(const VarId&) const = default;
  bool operator==(const VarId&) const = default;
};

enum class Relation { LessEq, Less, GreaterEq, Equal };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LessEq: return "<=";
    case Relation::Less: return "<";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

/// Σ coeff·var (relation) rhs with exact integer data. Terms are kept sorted
/// by variable with nonzero coefficients.
struct LinearConstraint {
  std::vector<std::pair<VarId, Integer>> lhs;
  Relation relation = Relation::LessEq;
  Integer rhs = 0;

  LinearConstraint() = default;
  LinearConstraint(std::vector<std::pair<VarId, Integer>> terms, Relation rel, Integer rhs)
      : relation(rel), rhs(std::move(rhs)) {
    std::map<VarId, Integer> merged;
    for (auto& [v, c] : terms) merged[v] += c;
    for (auto& [v, c] : merged)
      if (c != 0) lhs.emplace_back(v, c);
    if (lhs.empty()) throw PreconditionError("constraint without variables");
  }

  bool is_strict() const { return relation == Relation::Less; }

  template <class Value, class Lookup>
  bool holds(Lookup&& value_of) const {
    Value sum = 0;
    for (const auto& [v, c] : lhs) sum += Value(c) * value_of(v);
    const Value r(rhs);
    switch (relation) {
      case Relation::LessEq: return sum <= r;
      case Relation::Less: return sum < r;
      case Relation::GreaterEq: return sum >= r;
      case Relation::Equal: return sum == r;
    }
    return false;
  }

  /// Human-oriented rendering: positive terms left, negated negative terms
  /// right, constant on whichever side keeps it positive.
  std::string str() const {
    std::vector<std::string> left, right;
    auto term = [](const VarId& v, const Integer& c) {
      return c == 1 ? v.str() : c.str() + "*" + v.str();
    };
    for (const auto& [v, c] : lhs) (c > 0 ? left : right).push_back(term(v, c > 0 ? c : Integer(-c)));
    if (rhs > 0) right.push_back(rhs.str());
    if (rhs < 0) left.push_back(Integer(-rhs).str());
    auto side = [](const std::vector<std::string>& s) {
      if (s.empty()) return std::string("0");
      std::string out = s[0];
      for (std::size_t i = 1; i < s.size(); ++i) out += " + " + s[i];
      return out;
    };
    return side(left) + " " + std::string(to_string(relation)) + " " + side(right);
  }

  /// Orientation-independent form used to compare systems as sets: an
  /// equality is flipped so its first coefficient is positive.
  std::string canonical() const {
    if (relation != Relation::Equal || lhs.front().second > 0) return str();
    LinearConstraint flipped = *this;
    for (auto& t : flipped.lhs) t.second = -t.second;
    flipped.rhs = -flipped.rhs;
    return flipped.str();
  }

  bool operator==(const LinearConstraint&) const = default;
};

/// Named-variable linear constraints over nonnegative unknowns.
class IneqSystem {
 public:
  IneqSystem() = default;

  void add_variable(const VarId& v) {
    if (position_.emplace(v, variables_.size()).second) variables_.push_back(v);
  }
  void add_constraint(LinearConstraint c) {
    for (const auto& [v, coeff] : c.lhs)
      if (!has_variable(v)) throw PreconditionError("unregistered variable " + v.str());
    constraints_.push_back(std::move(c));
  }

  bool has_variable(const VarId& v) const { return position_.count(v) != 0; }
  std::size_t position(const VarId& v) const {
    auto it = position_.find(v);
    if (it == position_.end()) throw PreconditionError("unregistered variable " + v.str());
    return it->second;
  }
  const std::vector<VarId>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  bool has_strict() const {
    return std::any_of(constraints_.begin(), constraints_.end(),
                       [](const LinearConstraint& c) { return c.is_strict(); });
  }
  std::size_t e_variable_count() const {
    return static_cast<std::size_t>(std::count_if(variables_.begin(), variables_.end(),
                                                  [](const VarId& v) { return !v.is_w(); }));
  }

  /// Debug dump: one constraint per line.
  std::string str() const {
    std::string out;
    for (const auto& c : constraints_) out += c.str() + "\n";
    return out;
  }
  std::set<std::string> canonical_set() const {
    std::set<std::string> out;
    for (const auto& c : constraints_) out.insert(c.canonical());
    return out;
  }

 private:
  std::vector<VarId> variables_;
  std::map<VarId, std::size_t> position_;
  std::vector<LinearConstraint> constraints_;
};

/// Exact assignment of nonnegative values to the variables of a system.
template <class Value>
struct Assignment {
  std::map<VarId, Value> values;

  const Value& at(const VarId& v) const {
    auto it = values.find(v);
    if (it == values.end()) throw PreconditionError("no value for " + v.str());
    return it->second;
  }
  Value get(const VarId& v) const {
    auto it = values.find(v);
    return it == values.end() ? Value(0) : it->second;
  }

  /// First constraint of `sys` the assignment violates, or nullopt. Every
  /// variable of the system must be assigned and nonnegative.
  std::optional<std::size_t> first_violation(const IneqSystem& sys) const {
    for (const auto& v : sys.variables())
      if (at(v) < 0) return sys.constraints().size();
    for (std::size_t i = 0; i < sys.constraints().size(); ++i)
      if (!sys.constraints()[i].template holds<Value>([&](const VarId& v) { return at(v); })) return i;
    return std::nullopt;
  }
  bool satisfies(const IneqSystem& sys) const { return !first_violation(sys).has_value(); }

  std::string str(const IneqSystem& sys) const {
    std::string out;
    for (const auto& v : sys.variables()) out += v.str() + " = " + at(v).str() + "\n";
    return out;
  }
};

using Solution = Assignment<Rational>;
using IntegerSolution = Assignment<Integer>;

namespace detail {

inline VarId parse_var(std::string_view tok, std::size_t lineno) {
  auto fail = [&] { return ParseError(lineno, "bad variable '" + std::string(tok) + "'"); };
  if (tok.size() < 4 || tok.back() != ']') throw fail();
  if (tok.substr(0, 2) == "w[") {
    std::string m(tok.substr(2, tok.size() - 3));
    if (!is_valid_id(m)) throw fail();
    return VarId::w(m);
  }
  if (tok.substr(0, 2) == "e[") {
    std::string_view body = tok.substr(2, tok.size() - 3);
    auto arrow = body.find("->");
    if (arrow == std::string_view::npos) throw fail();
    std::string x(body.substr(0, arrow)), m(body.substr(arrow + 2));
    if (!is_valid_id(x) || !is_valid_id(m) || x == m) throw fail();
    return VarId::e(x, m);
  }
  throw fail();
}

// Parses "t1 + t2 - t3" where a term is an integer, a variable, or k*variable.
inline void parse_side(std::string_view side, Integer sign, std::size_t lineno,
                       std::vector<std::pair<VarId, Integer>>& terms, Integer& constant) {
  std::istringstream in{std::string(side)};
  std::string tok;
  Integer next_sign = 1;
  bool expect_term = true;
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      if (expect_term) throw ParseError(lineno, "dangling '" + tok + "'");
      next_sign = tok == "+" ? 1 : -1;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw ParseError(lineno, "missing operator before '" + tok + "'");
    Integer coeff = 1;
    std::string var = tok;
    if (auto star = tok.find('*'); star != std::string::npos) {
      try {
        coeff = Integer(tok.substr(0, star));
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad coefficient in '" + tok + "'");
      }
      var = tok.substr(star + 1);
    }
    if (!var.empty() && std::all_of(var.begin(), var.end(), [](unsigned char c) { return std::isdigit(c); })) {
      if (tok.find('*') != std::string::npos) throw ParseError(lineno, "bad term '" + tok + "'");
      constant += sign * next_sign * Integer(var);
    } else {
      terms.emplace_back(parse_var(var, lineno), sign * next_sign * coeff);
    }
    expect_term = false;
  }
  if (expect_term) throw ParseError(lineno, "empty side");
}

}  // namespace detail

/// Reads the debug dump format back. Also accepts '>' (flipped to '<') so
/// systems can be written in either orientation. Variables are
/// registered in order of first appearance.
inline IneqSystem parse_system(std::string_view text) {
  IneqSystem sys;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    // Relation symbol outside of variable brackets ("->" contains '>').
    std::size_t at = std::string::npos, len = 0;
    int op = -1;
    int depth = 0;
    for (std::size_t i = 0; i < line.size() && op < 0; ++i) {
      char ch = line[i];
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (depth != 0) continue;
      bool eq_next = i + 1 < line.size() && line[i + 1] == '=';
      if (ch == '<') op = eq_next ? 0 : 2;
      if (ch == '>') op = eq_next ? 1 : 3;
      if (ch == '=') op = 4;
      if (op >= 0) {
        at = i;
        len = (op <= 1) ? 2 : 1;
      }
    }
    if (op < 0) throw ParseError(lineno, "missing relation");
    std::vector<std::pair<VarId, Integer>> terms;
    Integer constant = 0;  // accumulated as (left - right) constant part
    detail::parse_side(std::string_view(line).substr(0, at), 1, lineno, terms, constant);
    detail::parse_side(std::string_view(line).substr(at + len), -1, lineno, terms, constant);
    Relation rel = Relation::LessEq;
    if (op == 1) rel = Relation::GreaterEq;
    if (op == 2) rel = Relation::Less;
    if (op == 4) rel = Relation::Equal;
    if (op == 3) {  // a > b  <=>  -a + b < 0
      rel = Relation::Less;
      for (auto& t : terms) t.second = -t.second;
      constant = -constant;
    }
    for (const auto& [v, c] : terms) sys.add_variable(v);
    try {
      sys.add_constraint(LinearConstraint(std::move(terms), rel, -constant));
    } catch (const PreconditionError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return sys;
}

}  // namespace cfgkit

#endif  // CFGKIT_LINEAR_SYSTEM_HPP
