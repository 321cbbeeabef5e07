#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wedgi/errors.hpp"

namespace wedgi {

/**
 * Polynomial ring k[x_1..x_n] identified by its variable labels.
 * Labels are used for parsing and display; two rings are the same
 * ring exactly when their label lists agree.
 */
struct AmbientRing {
  std::vector<std::string> var_labels;

  AmbientRing() = default;

  explicit AmbientRing(std::vector<std::string> labels) : var_labels(std::move(labels)) {
    for (std::size_t a = 0; a < var_labels.size(); ++a)
      for (std::size_t b = a + 1; b < var_labels.size(); ++b)
        if (var_labels[a] == var_labels[b])
          throw error("ambient ring: duplicate variable label '" + var_labels[a] + "'");
  }

  // Ring with default labels x1..xn.
  static AmbientRing with_vars(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    return AmbientRing(std::move(labels));
  }

  int n() const { return static_cast<int>(var_labels.size()); }

  const std::string& label(int i) const { return var_labels[static_cast<std::size_t>(i)]; }

  // Index of a label, or -1.
  int index_of(const std::string& lab) const {
    for (int i = 0; i < n(); ++i)
      if (var_labels[static_cast<std::size_t>(i)] == lab) return i;
    return -1;
  }

  friend bool operator==(const AmbientRing& a, const AmbientRing& b) {
    return a.var_labels == b.var_labels;
  }
  friend bool operator!=(const AmbientRing& a, const AmbientRing& b) { return !(a == b); }
};

/**
 * Monomial as an exponent vector.  The ambient ring is carried by the
 * surrounding ideal (or passed explicitly to parse/format); a Monomial
 * itself is just the exponent data.
 */
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw error("monomial: negative exponent");
  }

  static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int n() const { return static_cast<int>(exps_.size()); }
  int exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exps() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  // Indices of variables with positive exponent, ascending.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < n(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    return s;
  }

  bool divides(const Monomial& other) const {
    check_same_ring(other);
    for (int i = 0; i < n(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  Monomial times(const Monomial& other) const {
    check_same_ring(other);
    std::vector<int> e(exps_);
    for (int i = 0; i < n(); ++i) e[static_cast<std::size_t>(i)] += other.exp(i);
    return Monomial(std::move(e));
  }

  Monomial lcm(const Monomial& other) const {
    check_same_ring(other);
    std::vector<int> e(exps_);
    for (int i = 0; i < n(); ++i) e[static_cast<std::size_t>(i)] = std::max(e[static_cast<std::size_t>(i)], other.exp(i));
    return Monomial(std::move(e));
  }

  Monomial gcd(const Monomial& other) const {
    check_same_ring(other);
    std::vector<int> e(exps_);
    for (int i = 0; i < n(); ++i) e[static_cast<std::size_t>(i)] = std::min(e[static_cast<std::size_t>(i)], other.exp(i));
    return Monomial(std::move(e));
  }

  // this / gcd(this, m): the generator contribution to the colon ideal (I : m).
  Monomial colon_by(const Monomial& m) const {
    check_same_ring(m);
    std::vector<int> e(exps_);
    for (int i = 0; i < n(); ++i)
      e[static_cast<std::size_t>(i)] = std::max(e[static_cast<std::size_t>(i)] - m.exp(i), 0);
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  void check_same_ring(const Monomial& other) const {
    if (n() != other.n()) throw ring_mismatch("monomial arity mismatch");
  }

  std::vector<int> exps_;
};

// Graded lexicographic comparison: degree first, then lex on exponent
// vectors (earlier variable with larger exponent wins).  Returns <0, 0, >0.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw ring_mismatch("monomial arity mismatch");
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < a.n(); ++i)
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
  return 0;
}

// Canonical generator order: graded lex, largest first.
inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; }

inline std::string format_monomial(const Monomial& m, const AmbientRing& ring) {
  if (m.n() != ring.n()) throw ring_mismatch("monomial does not fit the ring");
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.n(); ++i) {
    int e = m.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.label(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

/**
 * Parse a monomial in the form used throughout: factors joined by '*',
 * each factor a variable label optionally followed by '^' and a positive
 * exponent.  "1" denotes the unit monomial.  Example: "x1^2*x3".
 */
inline Monomial parse_monomial(const std::string& text, const AmbientRing& ring) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty monomial");
  if (s == "1") return Monomial::one(ring.n());

  std::vector<int> exps(static_cast<std::size_t>(ring.n()), 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t star = s.find('*', pos);
    std::string factor = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (factor.empty()) throw parse_error("empty factor in monomial '" + text + "'");

    std::string label = factor;
    int exp = 1;
    std::size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      label = factor.substr(0, caret);
      std::string digits = factor.substr(caret + 1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw parse_error("bad exponent in factor '" + factor + "'");
      exp = std::stoi(digits);
      if (exp <= 0) throw parse_error("exponent must be positive in '" + factor + "'");
    }
    int idx = ring.index_of(label);
    if (idx < 0) throw parse_error("unknown variable '" + label + "'");
    exps[static_cast<std::size_t>(idx)] += exp;

    if (star == std::string::npos) break;
    pos = star + 1;
    if (pos >= s.size()) throw parse_error("trailing '*' in monomial '" + text + "'");
  }
  return Monomial(std::move(exps));
}

}  // namespace wedgi
