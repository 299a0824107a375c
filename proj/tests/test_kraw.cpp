#include "conewit/kraw.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace conewit;

namespace {

using TypeSet = std::set<EdgeType>;

TypeSet as_set(const std::vector<EdgeType>& v) { return {v.begin(), v.end()}; }

// Reference expansion by the binomial theorem with explicit coefficient
// arrays; no truncation until the end.
BigInt line_coefficient(std::size_t k, std::size_t l, std::size_t m, std::size_t n, std::size_t i,
                        std::size_t j) {
  (void)m;
  (void)n;
  BigInt sum = 0;
  for (std::size_t r = 0; r <= std::min(k, i); ++r) {
    const std::size_t s = i - r;
    if (s > l || k - r + l - s != j) continue;
    const BigInt term = binomial(k, r) * binomial(l, s);
    if (r % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(81, 40), BigInt("212392290424395860814420"));
}

TEST(KrawCoeff, Values) {
  EXPECT_EQ(kraw_coeff(1, 3, 3), 0);
  EXPECT_EQ(kraw_coeff(2, 2, 2), 0);
  EXPECT_EQ(kraw_coeff(3, 1, 2), -2);
  EXPECT_EQ(kraw_coeff(2, 2, 3), -2);
}

TEST(KrawCoeff, TwoByTwoLine) {
  // On k + l = 2 with m = 2 the coefficient is l - k.
  for (std::size_t k = 0; k <= 2; ++k)
    EXPECT_EQ(kraw_coeff(k, 2 - k, 2), static_cast<long>(2 - k) - static_cast<long>(k));
}

TEST(PolyCondition, MatchesCoefficientOnTheLine) {
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t n = 2; n <= 5; ++n)
      for (std::size_t k = 0; k <= 12; ++k)
        for (std::size_t l = 0; l <= 12; ++l) {
          if (k + l != m + n - 2) continue;
          EXPECT_EQ(poly_condition(k, l, m, n), kraw_coeff(k, l, m) != 0)
              << k << " " << l << " " << m << " " << n;
        }
}

TEST(PolyCondition, MatchesDirectExpansion) {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t k = 0; k <= 8; ++k)
        for (std::size_t l = 0; l <= 8; ++l) {
          bool any = false;
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) any = any || line_coefficient(k, l, m, n, i, j) != 0;
          EXPECT_EQ(poly_condition(k, l, m, n), any) << k << " " << l << " " << m << " " << n;
        }
}

TEST(PolyCondition, AlwaysHoldsBelowTheLine) {
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t n = 2; n <= 6; ++n)
      for (std::size_t k = 0; k + 2 < m + n; ++k)
        for (std::size_t l = 0; k + l + 2 < m + n; ++l) EXPECT_TRUE(poly_condition(k, l, m, n));
}

TEST(PolyCondition, FailsAboveTheLine) {
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t n = 2; n <= 5; ++n)
      for (std::size_t k = 0; k <= 10; ++k)
        for (std::size_t l = 0; l <= 10; ++l)
          if (k + l > m + n - 2) {
            EXPECT_FALSE(poly_condition(k, l, m, n));
          }
}

TEST(Catalog, ThreeByThree) {
  const TypeCatalog cat = admissible_edge_types(3, 3);
  const TypeSet want{{4, 4}, {5, 5}, {5, 6}, {5, 7}, {6, 6}, {5, 8}, {6, 7}, {6, 8}};
  EXPECT_EQ(as_set(cat.up_to_symmetry()), want);
  EXPECT_FALSE(cat.note.empty());
}

TEST(Catalog, TwoByFour) {
  const TypeSet want{{5, 5}, {5, 6}, {6, 5}, {6, 6}};
  EXPECT_EQ(as_set(admissible_edge_types(2, 4).admissible), want);
  EXPECT_EQ(as_set(admissible_edge_types(4, 2).admissible), want);
}

TEST(Catalog, TwoByTwo) {
  const TypeSet want{{3, 3}};
  EXPECT_EQ(as_set(admissible_edge_types(2, 2).admissible), want);
}

TEST(Catalog, WithoutRankFourRule) {
  const TypeCatalog cat = admissible_edge_types(3, 3, false);
  const TypeSet all = as_set(cat.admissible);
  EXPECT_TRUE(all.count({4, 5}));
  EXPECT_TRUE(all.count({4, 8}));
  const TypeCatalog with = admissible_edge_types(3, 3, true);
  for (const auto& x : with.exclusions)
    if (x.reason == ExclusionReason::Rank4Rule) {
      EXPECT_TRUE(all.count(x.type));
    }
}

TEST(Catalog, ExclusionLedgerCoversEverything) {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      const TypeCatalog cat = admissible_edge_types(m, n);
      EXPECT_EQ(cat.admissible.size() + cat.exclusions.size(), m * n * m * n);
      EXPECT_TRUE(std::is_sorted(cat.admissible.begin(), cat.admissible.end()));
    }
}

TEST(Catalog, UpperBoundRegionEqualsPolynomialRegion) {
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t n = 2; n <= 6; ++n) {
      const std::size_t mn = m * n;
      for (std::size_t p = 1; p <= mn; ++p)
        for (std::size_t q = 1; q <= mn; ++q) {
          const bool beyond_bound = p + q > 2 * mn - m - n + 2;
          const bool below_line = (mn - p) + (mn - q) < m + n - 2;
          EXPECT_EQ(beyond_bound, below_line);
          if (below_line) {
            EXPECT_TRUE(poly_condition(mn - p, mn - q, m, n));
          }
        }
    }
}

TEST(Catalog, SymmetricForSquareDims) {
  for (std::size_t m = 2; m <= 5; ++m) {
    const TypeSet s = as_set(admissible_edge_types(m, m).admissible);
    for (const auto& [p, q] : s) EXPECT_TRUE(s.count({q, p}));
  }
}

TEST(Catalog, AdmissibleTypesSatisfyBounds) {
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t n = 2; n <= 5; ++n)
      for (const auto& [p, q] : admissible_edge_types(m, n).admissible) {
        EXPECT_GT(p, std::max(m, n));
        EXPECT_GT(q, std::max(m, n));
        EXPECT_LE(p + q, 2 * m * n - m - n + 2);
      }
}

TEST(Catalog, RejectsSmallDims) { EXPECT_THROW(admissible_edge_types(1, 3), DomainError); }

}  // namespace
