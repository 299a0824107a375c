#ifndef CONEWIT_KRAW_HPP
#define CONEWIT_KRAW_HPP

// Exact integer tests that rule out edge types (p, q) in M_m (x) M_n.
//
// With k = mn - p and l = mn - q, the type is excluded whenever
// (-a + b)^k (a + b)^l does not vanish modulo (a^m, b^n).

#include "conewit/matcore.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conewit {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Expands the product by repeated multiplication, dropping every monomial
/// a^i b^j with i >= m or j >= n as it appears. True iff something survives.
inline bool poly_condition(std::size_t k, std::size_t l, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) return false;
  // c[i][j] = coefficient of a^i b^j
  std::vector<std::vector<BigInt>> c(m, std::vector<BigInt>(n, 0));
  c[0][0] = 1;
  const auto multiply = [&](int sign_a) {
    std::vector<std::vector<BigInt>> next(m, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (c[i][j] == 0) continue;
        if (i + 1 < m) next[i + 1][j] += sign_a * c[i][j];
        if (j + 1 < n) next[i][j + 1] += c[i][j];
      }
    c = std::move(next);
  };
  for (std::size_t t = 0; t < k; ++t) multiply(-1);
  for (std::size_t t = 0; t < l; ++t) multiply(+1);
  for (const auto& row : c)
    for (const auto& x : row)
      if (x != 0) return true;
  return false;
}

/// sum_{r+s=m-1} (-1)^r C(k,r) C(l,s): the a^{m-1} b^{n-1} coefficient when k + l = m + n - 2.
inline BigInt kraw_coeff(std::size_t k, std::size_t l, std::size_t m) {
  if (m == 0) return 0;
  BigInt sum = 0;
  for (std::size_t r = 0; r <= m - 1; ++r) {
    const BigInt term = binomial(k, r) * binomial(l, m - 1 - r);
    if (r % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

enum class ExclusionReason { LowerBound, UpperBoundOrPoly, KrawtchoukCoeff, Rank4Rule };

inline const char* to_string(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::LowerBound: return "LowerBound";
    case ExclusionReason::UpperBoundOrPoly: return "UpperBoundOrPoly";
    case ExclusionReason::KrawtchoukCoeff: return "KrawtchoukCoeff";
    case ExclusionReason::Rank4Rule: return "Rank4Rule";
  }
  return "unknown";
}

using EdgeType = std::pair<std::size_t, std::size_t>;

struct TypeExclusion {
  EdgeType type;
  ExclusionReason reason;
};

/// Types not ruled out by the necessary conditions. Admissible does not mean
/// that an edge of that type exists.
struct TypeCatalog {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<EdgeType> admissible;  // sorted
  std::vector<TypeExclusion> exclusions;
  std::string note;

  /// Admissible types with p <= q.
  std::vector<EdgeType> up_to_symmetry() const {
    std::vector<EdgeType> out;
    for (const auto& t : admissible)
      if (t.first <= t.second) out.push_back(t);
    return out;
  }
};

inline TypeCatalog admissible_edge_types(std::size_t m, std::size_t n, bool apply_rank4_rule = true) {
  if (m < 2 || n < 2) throw DomainError("admissible_edge_types: m, n must be >= 2");
  TypeCatalog cat;
  cat.m = m;
  cat.n = n;
  cat.note = "necessary conditions only; an admissible type need not be realized by an edge";
  const std::size_t mn = m * n;
  const std::size_t big = std::max(m, n);
  const std::size_t line = m + n - 2;
  for (std::size_t p = 1; p <= mn; ++p)
    for (std::size_t q = 1; q <= mn; ++q) {
      const std::size_t k = mn - p;
      const std::size_t l = mn - q;
      std::optional<ExclusionReason> why;
      if (p <= big || q <= big) {
        why = ExclusionReason::LowerBound;
      } else if (k + l < line) {
        why = ExclusionReason::UpperBoundOrPoly;
      } else if (k + l == line && kraw_coeff(k, l, m) != 0) {
        why = ExclusionReason::KrawtchoukCoeff;
      } else if (apply_rank4_rule && m == 3 && n == 3 &&
                 ((p == 4 && q > 4) || (q == 4 && p > 4))) {
        why = ExclusionReason::Rank4Rule;
      }
      if (why) cat.exclusions.push_back({{p, q}, *why});
      else cat.admissible.push_back({p, q});
    }
  return cat;
}

}  // namespace conewit

#endif  // CONEWIT_KRAW_HPP
