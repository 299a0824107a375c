#include "support.hpp"

#include <gtest/gtest.h>

using namespace conewit;
using namespace testing_support;

namespace {

TEST(FamilyChoi, Layout) {
  const Matrix a = family_choi(1.5, 0.25, 2.0);
  const double diag[9] = {1.5, 2.0, 0.25, 0.25, 1.5, 2.0, 2.0, 0.25, 1.5};
  for (int i = 0; i < 9; ++i) EXPECT_EQ(a(i, i), cplx(diag[i]));
  for (auto [i, j] : {std::pair{0, 4}, std::pair{0, 8}, std::pair{4, 8}}) {
    EXPECT_EQ(a(i, j), cplx(-1.0));
    EXPECT_EQ(a(j, i), cplx(-1.0));
  }
  EXPECT_NEAR((a.array().abs()).sum(), 3 * (1.5 + 2.0 + 0.25) + 6.0, 1e-14);
}

TEST(FamilyChoi, MatchesDefiningFormula) {
  std::mt19937_64 rng(1);
  const double a = 0.7, b = 1.1, c = 0.3;
  const Matrix x = random_matrix(rng, 3, 3);
  Matrix want(3, 3);
  want << a * x(0, 0) + b * x(1, 1) + c * x(2, 2), -x(0, 1), -x(0, 2),
      -x(1, 0), c * x(0, 0) + a * x(1, 1) + b * x(2, 2), -x(1, 2),
      -x(2, 0), -x(2, 1), b * x(0, 0) + c * x(1, 1) + a * x(2, 2);
  EXPECT_LE((conewit::apply(phi_family(a, b, c), x) - want).norm(), 1e-13);
}

TEST(FamilyChoi, NegativeParameter) {
  EXPECT_THROW(phi_family(-0.1, 0, 0), DomainError);
  EXPECT_THROW(classify(0, -1, 0), DomainError);
}

TEST(Classify, ChoiMap) {
  const auto r = classify(1, 0, 1);
  EXPECT_TRUE(r.positive);
  EXPECT_FALSE(r.two_positive);
  EXPECT_FALSE(r.completely_positive);
  EXPECT_FALSE(r.completely_copositive);
  EXPECT_FALSE(r.decomposable);
}

TEST(Classify, CompletelyPositiveBoundary) {
  const auto r = classify(2, 0, 0);
  EXPECT_TRUE(r.positive);
  EXPECT_TRUE(r.two_positive);
  EXPECT_TRUE(r.completely_positive);
  EXPECT_FALSE(r.completely_copositive);
  EXPECT_TRUE(is_psd(family_choi(2, 0, 0)));
}

TEST(Classify, CompletelyCopositive) {
  const auto r = classify(0, 1, 1);
  EXPECT_TRUE(r.completely_copositive);
  EXPECT_TRUE(r.decomposable);
  EXPECT_FALSE(r.completely_positive);
}

TEST(Classify, TwoPositiveNotCp) {
  const auto r = classify(1, 2, 2);
  EXPECT_TRUE(r.two_positive);
  EXPECT_FALSE(r.completely_positive);
  EXPECT_FALSE(classify(1.5, 1, 0.5).two_positive);
}

TEST(Classify, LiteralTwoPositivityNeedsPositivity) {
  // 1 <= a < 2 with b = c = 0 meets bc >= (2-a)(b+c) but a+b+c < 2.
  const auto r = classify(1.5, 0, 0);
  EXPECT_FALSE(r.positive);
  EXPECT_FALSE(r.two_positive);
}

TEST(Classify, PptIffCpAndCoCp) {
  EXPECT_TRUE(classify(2, 1, 1).choi_matrix_ppt);
  EXPECT_FALSE(classify(2, 0, 0).choi_matrix_ppt);
}

TEST(Classify, ImplicationChainOnGrid) {
  const int steps = 50;
  int violations = 0;
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j)
      for (int k = 0; k < steps; ++k) {
        const double a = 3.0 * i / (steps - 1), b = 3.0 * j / (steps - 1), c = 3.0 * k / (steps - 1);
        const auto r = classify(a, b, c);
        if (r.completely_positive && !r.two_positive) ++violations;
        if (r.two_positive && !r.positive) ++violations;
        if (r.completely_copositive && !r.positive) ++violations;
        if ((r.completely_positive || r.completely_copositive) && !r.decomposable) ++violations;
        if (r.decomposable && !r.positive) ++violations;
        if (r.choi_matrix_ppt != (r.completely_positive && r.completely_copositive)) ++violations;
      }
  EXPECT_EQ(violations, 0);
}

TEST(Classify, SpectralOracleOnSamples) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = uniform(rng, 0, 3), b = uniform(rng, 0, 3), c = uniform(rng, 0, 3);
    const auto r = classify(a, b, c);
    const Matrix ch = family_choi(a, b, c);
    EXPECT_EQ(r.completely_positive, is_psd(ch)) << a << " " << b << " " << c;
    EXPECT_EQ(r.completely_copositive, is_psd(partial_transpose(ch, Dims{3, 3}))) << a << " " << b << " " << c;
  }
}

TEST(Classify, PositivityAgainstSearch) {
  std::mt19937_64 rng(3);
  SearchConfig cfg;
  cfg.restarts = 32;
  int checked_neg = 0, checked_pos = 0;
  while (checked_neg < 15 || checked_pos < 15) {
    const double a = uniform(rng, 0, 3), b = uniform(rng, 0, 3), c = uniform(rng, 0, 3);
    const bool pos = classify(a, b, c).positive;
    if ((pos && checked_pos >= 15) || (!pos && checked_neg >= 15)) continue;
    cfg.seed = rng();
    const SearchResult s = min_pairing_over_products(phi_family(a, b, c), cfg);
    if (pos) {
      ++checked_pos;
      EXPECT_GE(s.value, -1e-7) << a << " " << b << " " << c;
    } else {
      ++checked_neg;
      EXPECT_LT(s.value, -1e-7) << a << " " << b << " " << c;
    }
  }
}

}  // namespace
