#include <gtest/gtest.h>

#include <random>

#include "alexander_oracle.hpp"
#include "knot818/error.hpp"
#include "knot818/invariants.hpp"
#include "test_support.hpp"

namespace knot818 {
namespace {

const LaurentPoly kDelta818(0, {1, -5, 10, -13, 10, -5, 1});
const LaurentPoly kTrefoil(0, {1, -1, 1});

PolyMatrix matrix2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  PolyMatrix m(2);
  m(0, 0) = std::move(a);
  m(0, 1) = std::move(b);
  m(1, 0) = std::move(c);
  m(1, 1) = std::move(d);
  return m;
}

// p(t0) / q(t0) must be the same unit +-t0^k at every sample point.
void expect_associate_at_points(const BraidWord& braid, const LaurentPoly& delta) {
  const std::vector<Rational> points{Rational(2), Rational(3), Rational(-2), Rational(1, 3), Rational(5, 7)};
  std::optional<int> exponent;
  std::optional<int> sign;
  for (const auto& x : points) {
    const Rational oracle = testing::alexander_matrix_minor(braid, x);
    const Rational expected = evaluate(delta, x);
    ASSERT_NE(expected, 0);
    const Rational ratio = oracle / expected;
    // Find k with ratio == +-x^k, |k| <= 2 * length.
    std::optional<std::pair<int, int>> found;
    for (int k = -2 * static_cast<int>(braid.length()) - 2; k <= 2 * static_cast<int>(braid.length()) + 2; ++k) {
      const Rational unit = evaluate(LaurentPoly::monomial(1, k), x);
      if (ratio == unit) found = std::pair{k, 1};
      if (ratio == -unit) found = std::pair{k, -1};
    }
    ASSERT_TRUE(found) << "ratio " << to_string(ratio) << " is not a unit at t=" << to_string(x);
    if (!exponent) {
      exponent = found->first;
      sign = found->second;
    }
    EXPECT_EQ(found->first, *exponent);
    EXPECT_EQ(found->second, *sign);
  }
}

TEST(Burau, EmptyWordIsIdentity) { EXPECT_EQ(burau_reduced(BraidWord(3, {})), PolyMatrix::identity(2)); }

TEST(Burau, SigmaOneConvention) {
  EXPECT_EQ(burau_reduced(BraidWord(3, {1})),
            matrix2(LaurentPoly::monomial(-1, 1), LaurentPoly::one(), LaurentPoly(), LaurentPoly::one()));
}

TEST(Burau, SigmaTwoConvention) {
  EXPECT_EQ(burau_reduced(BraidWord(3, {2})),
            matrix2(LaurentPoly::one(), LaurentPoly(), LaurentPoly::t(), LaurentPoly::monomial(-1, 1)));
}

TEST(Burau, InverseLaw) {
  for (int strands = 2; strands <= 5; ++strands) {
    const auto id = PolyMatrix::identity(static_cast<std::size_t>(strands - 1));
    for (int i = 1; i < strands; ++i) {
      EXPECT_EQ(burau_reduced(BraidWord(strands, {i, -i})), id);
      EXPECT_EQ(burau_reduced(BraidWord(strands, {-i, i})), id);
    }
  }
}

TEST(Burau, Homomorphism) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int strands = 2 + trial % 4;
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<int> u, v;
    for (int k = len(rng); k > 0; --k) u.push_back(coin(rng) ? gen(rng) : -gen(rng));
    for (int k = len(rng); k > 0; --k) v.push_back(coin(rng) ? gen(rng) : -gen(rng));
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    EXPECT_EQ(burau_reduced(BraidWord(strands, uv)),
              burau_reduced(BraidWord(strands, u)) * burau_reduced(BraidWord(strands, v)));
  }
}

TEST(Burau, BraidRelations) {
  EXPECT_EQ(burau_reduced(BraidWord(3, {1, 2, 1})), burau_reduced(BraidWord(3, {2, 1, 2})));
  EXPECT_EQ(burau_reduced(BraidWord(4, {2, 3, 2})), burau_reduced(BraidWord(4, {3, 2, 3})));
  EXPECT_EQ(burau_reduced(BraidWord(4, {1, 3})), burau_reduced(BraidWord(4, {3, 1})));
  EXPECT_EQ(burau_reduced(BraidWord(3, {-1, -2, -1})), burau_reduced(BraidWord(3, {-2, -1, -2})));
}

TEST(Determinant, SmallMatrices) {
  EXPECT_EQ(determinant(PolyMatrix::identity(4)), LaurentPoly::one());
  EXPECT_EQ(determinant(matrix2(LaurentPoly::constant(2), LaurentPoly::constant(3), LaurentPoly::constant(5),
                                LaurentPoly::constant(7))),
            LaurentPoly::constant(-1));
}

TEST(Alexander, Knot818MatchesStatedPolynomial) {
  const auto delta = alexander_from_braid(braid_818());
  EXPECT_EQ(delta, kDelta818);
  EXPECT_EQ(to_string(delta), "1 - 5*t + 10*t^2 - 13*t^3 + 10*t^4 - 5*t^5 + t^6");
}

TEST(Alexander, Unknot) { EXPECT_EQ(alexander_from_braid(BraidWord(2, {1})), LaurentPoly::one()); }

TEST(Alexander, TrefoilAgainstHandComputedAlexanderMatrix) {
  // Trefoil arcs a, b, c with all crossings positive; relation rows
  // (1-t) over + t in - out, last row and column deleted:
  //   | t    -1 |
  //   | 1-t   t |  -> t^2 + 1 - t
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly hand = t * t - (LaurentPoly::constant(-1) * (LaurentPoly::one() - t));
  EXPECT_EQ(normalize_alexander(hand), kTrefoil);
  EXPECT_EQ(alexander_from_braid(BraidWord(2, {1, 1, 1})), kTrefoil);
}

TEST(Alexander, FigureEight) {
  EXPECT_EQ(alexander_from_braid(BraidWord(3, {1, -2, 1, -2})), LaurentPoly(0, {1, -3, 1}));
}

TEST(Alexander, LinkIsRejected) {
  try {
    alexander_from_braid(BraidWord(2, {1, 1}));
    FAIL();
  } catch (const KnotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAKnot);
  }
}

TEST(Alexander, MarkovStabilization) {
  EXPECT_EQ(alexander_from_braid(BraidWord(3, {1, 1, 1, 2})), alexander_from_braid(BraidWord(2, {1, 1, 1})));
  EXPECT_EQ(alexander_from_braid(BraidWord(3, {1, 1, 1, -2})), alexander_from_braid(BraidWord(2, {1, 1, 1})));
  EXPECT_EQ(alexander_from_braid(BraidWord(4, {1, -2, 1, -2, 1, -2, 1, -2, 3})), kDelta818);
}

TEST(Alexander, ConjugationInvariance) {
  EXPECT_EQ(alexander_from_braid(BraidWord(3, {-2, 1, -2, 1, -2, 1, -2, 1})), kDelta818);
  EXPECT_EQ(alexander_from_braid(BraidWord(3, {2, 1, -2, 1, -2, 1, -2, 1, -2, -2})), kDelta818);
}

TEST(Alexander, SymmetryAndUnitValueOnRandomKnots) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto braid = testing::random_knot_braid(rng, 2 + trial % 3, 1 + trial % 10);
    const auto delta = alexander_from_braid(braid);
    EXPECT_EQ(normalize_alexander(delta.inverted_variable()), delta);
    const Rational at_one = evaluate(delta, Rational(1));
    EXPECT_TRUE(at_one == 1 || at_one == -1) << to_string(delta);
  }
}

TEST(Alexander, AgreesWithCrossingRelationOracle) {
  expect_associate_at_points(braid_818(), kDelta818);
  expect_associate_at_points(BraidWord(2, {1, 1, 1}), kTrefoil);
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto braid = testing::random_knot_braid(rng, 2 + trial % 3, 2 + trial % 8);
    expect_associate_at_points(braid, alexander_from_braid(braid));
  }
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize_alexander(LaurentPoly::monomial(-1, -2) * kDelta818), kDelta818);
  EXPECT_EQ(normalize_alexander(LaurentPoly::one()), LaurentPoly::one());
  EXPECT_EQ(evaluate(kDelta818, Rational(1)), Rational(-1));
  EXPECT_THROW(normalize_alexander(LaurentPoly()), KnotError);
}

TEST(Determinant, KnotDeterminantOf818) {
  EXPECT_EQ(evaluate(alexander_from_braid(braid_818()), Rational(-1)), Rational(45));
}

}  // namespace
}  // namespace knot818
