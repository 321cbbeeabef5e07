#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wedgi/monomial.hpp"

namespace wedgi {

/**
 * Monomial ideal held by its unique minimal generating set, kept sorted
 * in graded lex order (largest first).  The zero ideal is the empty
 * generator list; the unit ideal is rejected at construction.
 */
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(AmbientRing ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const auto& g : gens) {
      if (g.n() != ring_.n()) throw ring_mismatch("generator does not fit the ring");
      if (g.is_one()) throw error("monomial ideal: the unit ideal is not representable");
    }
    gens_ = minimalize_set(std::move(gens));
  }

  static MonomialIdeal zero(AmbientRing ring) { return MonomialIdeal(std::move(ring), {}); }

  // Convenience for tests and tools: parse each generator in the given ring.
  static MonomialIdeal from_strings(const AmbientRing& ring, const std::vector<std::string>& texts) {
    std::vector<Monomial> gens;
    gens.reserve(texts.size());
    for (const auto& t : texts) gens.push_back(parse_monomial(t, ring));
    return MonomialIdeal(ring, std::move(gens));
  }

  const AmbientRing& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  // Largest generator degree; 0 for the zero ideal.
  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  // All generators in one degree (vacuously true when zero).
  bool generated_in_single_degree() const {
    for (const auto& g : gens_)
      if (g.degree() != gens_.front().degree()) return false;
    return true;
  }

  // Union of generator supports, ascending variable indices.
  std::vector<int> support() const {
    std::vector<bool> seen(static_cast<std::size_t>(ring_.n()), false);
    for (const auto& g : gens_)
      for (int i : g.support()) seen[static_cast<std::size_t>(i)] = true;
    std::vector<int> s;
    for (int i = 0; i < ring_.n(); ++i)
      if (seen[static_cast<std::size_t>(i)]) s.push_back(i);
    return s;
  }

  // Membership: some generator divides m.
  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  // Drop duplicates and generators divisible by another; sort canonically.
  static std::vector<Monomial> minimalize_set(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), grlex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
        if (j != i && gens[j].divides(gens[i])) redundant = true;
      if (!redundant) keep.push_back(gens[i]);
    }
    return keep;
  }

  AmbientRing ring_;
  std::vector<Monomial> gens_;
};

inline void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) throw ring_mismatch("ideals live in different rings");
}

// Re-minimalize an arbitrary generating list (construction canonicalizes).
inline MonomialIdeal minimalize(const AmbientRing& ring, std::vector<Monomial> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

// Intersection via pairwise lcm of generators.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) gens.push_back(u.lcm(v));
  return MonomialIdeal(a.ring(), std::move(gens));
}

// Colon ideal (I : m) = ( u / gcd(u, m) : u in G(I) ).  If m lies in I the
// colon is the unit ideal, which is not representable here and throws.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.n() != ideal.ring().n()) throw ring_mismatch("colon divisor does not fit the ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& u : ideal.gens()) gens.push_back(u.colon_by(m));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

/**
 * Scale: u * I = ( u*g : g in G(I) ).  The scaled set is minimal whenever
 * G(I) is.  With require_disjoint_support the call enforces
 * supp(u) and supp(I) disjoint, the hypothesis under which
 * reg(u*I) = reg(I) + deg u and pd(u*I) = pd(I).
 */
inline MonomialIdeal scale(const Monomial& u, const MonomialIdeal& ideal,
                           bool require_disjoint_support = false) {
  if (u.n() != ideal.ring().n()) throw ring_mismatch("scale factor does not fit the ring");
  if (require_disjoint_support) {
    std::vector<int> su = u.support();
    std::vector<int> si = ideal.support();
    for (int i : su)
      if (std::binary_search(si.begin(), si.end(), i))
        throw error("scale: factor support meets ideal support at variable index " + std::to_string(i));
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(u.times(g));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ideal.gens()[i], ideal.ring());
  }
  return out + ")";
}

// Parse "(m1, m2, ...)"; "()" and "(0)" give the zero ideal.
inline MonomialIdeal parse_ideal(const std::string& text, const AmbientRing& ring) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw parse_error("ideal must be parenthesized: '" + text + "'");
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty() || body == "0") return MonomialIdeal::zero(ring);

  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    gens.push_back(parse_monomial(piece, ring));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace wedgi
