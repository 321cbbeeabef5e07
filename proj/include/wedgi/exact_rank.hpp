#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wedgi/errors.hpp"

namespace wedgi {

// Coefficient field for rank computations: characteristic 0 means exact
// rationals, otherwise a prime p and ranks are taken over GF(p).
struct FieldSpec {
  long long characteristic = 0;

  bool rational() const { return characteristic == 0; }
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void validate_field(const FieldSpec& f) {
  if (f.characteristic == 0) return;
  if (f.characteristic < 2 || f.characteristic > (1LL << 31) || !is_prime(f.characteristic))
    throw error("field characteristic must be 0 or a prime below 2^31");
}

namespace detail {

struct overflow_bail {};

// Fraction-free (Bareiss) elimination; every intermediate entry is a minor
// of the input, and each division is exact.  Works on rectangular input,
// skipping columns without a pivot.  Template so the same loop runs on
// checked 64-bit words and on arbitrary-precision integers.
template <typename Z, typename Mul>
int bareiss_rank(std::vector<std::vector<Z>>& m, Mul mul_sub_div) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  Z prev = Z(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != Z(0)) { pivot = i; break; }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = mul_sub_div(m[i][j], m[r][c], m[i][c], m[r][j], prev);
      m[i][c] = Z(0);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

// (a*piv - b*d) / prev with 128-bit intermediates; bails out when the exact
// quotient leaves the 64-bit range.
inline long long fused_checked(long long a, long long piv, long long b, long long d, long long prev) {
  __int128 t = static_cast<__int128>(a) * piv - static_cast<__int128>(b) * d;
  __int128 q = t / prev;
  if (q > INT64_MAX || q < INT64_MIN) throw overflow_bail{};
  return static_cast<long long>(q);
}

inline int rank_rational_int64(const std::vector<std::vector<long long>>& input) {
  auto m = input;
  return bareiss_rank<long long>(m, [](long long a, long long piv, long long b, long long d, long long prev) {
    return fused_checked(a, piv, b, d, prev);
  });
}

inline int rank_rational_bigint(const std::vector<std::vector<long long>>& input) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> m(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) m[i].assign(input[i].begin(), input[i].end());
  return bareiss_rank<cpp_int>(m, [](const cpp_int& a, const cpp_int& piv, const cpp_int& b,
                                     const cpp_int& d, const cpp_int& prev) {
    return cpp_int((a * piv - b * d) / prev);
  });
}

inline int rank_mod_p(const std::vector<std::vector<long long>>& input, long long p) {
  auto reduce = [p](long long x) { return ((x % p) + p) % p; };
  auto m = input;
  for (auto& row : m)
    for (auto& x : row) x = reduce(x);

  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) { pivot = i; break; }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    // Inverse of the pivot by Fermat.
    long long inv = 1, base = m[r][c], e = p - 2;
    while (e) {
      if (e & 1) inv = (__int128)inv * base % p;
      base = (__int128)base * base % p;
      e >>= 1;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      long long factor = (__int128)m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = ((m[i][j] - (__int128)factor * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace detail

/**
 * Exact rank of an integer matrix over the requested field.  The rational
 * path runs fraction-free elimination in 64-bit words and transparently
 * redoes the computation in arbitrary precision if an intermediate minor
 * overflows.
 */
inline int matrix_rank(const std::vector<std::vector<long long>>& m, const FieldSpec& field = {}) {
  if (m.empty() || m[0].empty()) return 0;
  if (!field.rational()) return detail::rank_mod_p(m, field.characteristic);
  try {
    return detail::rank_rational_int64(m);
  } catch (const detail::overflow_bail&) {
    return detail::rank_rational_bigint(m);
  }
}

}  // namespace wedgi
