#include <gtest/gtest.h>

#include <random>

#include "dalg/errors.hpp"
#include "dalg/ranking.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace dalg;
using namespace dalg::testing;

TEST(Ranking, ProfileExamples) {
  auto p = rank_profile(P("(y')^2 - 4*y"), kY);
  EXPECT_TRUE(p.is_proper());
  EXPECT_EQ(p.order, 1u);
  EXPECT_EQ(p.degree, 2u);
  EXPECT_EQ(p.leader, y(1));

  EXPECT_FALSE(rank_profile(P("u^2 + 3"), kY).is_proper());

  auto q = rank_profile(P("u*y''*y + y^5"), kY);
  EXPECT_EQ(q.order, 2u);
  EXPECT_EQ(q.degree, 1u);
  EXPECT_EQ(q.leader, y(2));

  EXPECT_THROW(rank_profile(DiffPoly{}, kY), MathError);
}

TEST(Ranking, InitialExamples) {
  EXPECT_EQ(initial(P("u*(y')^2 + y"), kY), P("u"));
  EXPECT_EQ(initial(P("(y')^2 - 4*y"), kY), P("1"));
  EXPECT_EQ(initial(P("(y^3 + u)*y'' + y'"), kY), P("y^3 + u"));
  try {
    initial(P("u + 1"), kY);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.reason(), "ConstantPolynomial");
  }
}

TEST(Ranking, SeparantExamples) {
  EXPECT_EQ(separant(P("(y')^2 - 4*y"), kY), P("2*y'"));
  EXPECT_EQ(separant(P("u*y'' + y'"), kY), P("u"));
  EXPECT_EQ(separant(P("y^3"), kY), P("3*y^2"));
  EXPECT_THROW(separant(P("u'"), kY), MathError);
}

TEST(Ranking, CompareExamples) {
  EXPECT_EQ(rank_compare(P("(y')^5"), P("y''"), kY), RankOrder::Less);
  EXPECT_EQ(rank_compare(P("u"), P("y"), kY), RankOrder::Less);
  EXPECT_EQ(rank_compare(P("y'+1"), P("y'-u"), kY), RankOrder::Equivalent);
  EXPECT_EQ(rank_compare(P("y"), P("u"), kY), RankOrder::Greater);
  EXPECT_EQ(rank_compare(P("u"), P("3"), kY), RankOrder::Equivalent);
  EXPECT_EQ(rank_compare(P("(y')^3"), P("(y')^2*y''"), kY), RankOrder::Less);
  EXPECT_THROW(rank_compare(DiffPoly{}, P("y"), kY), MathError);
}

TEST(Ranking, ReconstructionFromLeaderCoefficients) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    auto a = random_proper(rng);
    auto prof = rank_profile(a, kY);
    DiffPoly rebuilt;
    for (std::uint32_t j = 0; j <= prof.degree; ++j) {
      auto coeff = coefficient_of_power(a, prof.leader, prof.degree - j);
      if (coeff.is_zero()) continue;
      auto ord = coeff.order_in(kY);
      EXPECT_TRUE(!ord || *ord < prof.order);
      rebuilt += coeff * pow(DiffPoly(prof.leader), prof.degree - j);
    }
    EXPECT_EQ(rebuilt, a);
    EXPECT_EQ(coefficient_of_power(a, prof.leader, prof.degree), initial(a, kY));
  }
}

TEST(Ranking, SeparantInitialRelation) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    auto a = random_proper(rng);
    auto prof = rank_profile(a, kY);
    auto s = separant(a, kY);
    ASSERT_FALSE(s.is_zero());
    EXPECT_EQ(s.degree_in(prof.leader), prof.degree - 1);
    auto top = coefficient_of_power(s, prof.leader, prof.degree - 1);
    EXPECT_EQ(top, initial(a, kY).scaled(Rational(static_cast<long>(prof.degree))));
  }
}

TEST(Ranking, DerivativeLeaderIdentity) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto a = random_proper(rng);
    auto prof = rank_profile(a, kY);
    auto t = delta(a) - separant(a, kY) * DiffPoly(prof.leader.next());
    auto ord = t.order_in(kY);
    EXPECT_TRUE(!ord || *ord <= prof.order);
  }
}

TEST(Ranking, InitialAndSeparantRankBelow) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    auto a = random_proper(rng);
    EXPECT_EQ(rank_compare(initial(a, kY), a, kY), RankOrder::Less);
    EXPECT_EQ(rank_compare(separant(a, kY), a, kY), RankOrder::Less);
  }
}

TEST(Ranking, CompareIsStrictWeakOrder) {
  std::mt19937_64 rng(41);
  std::vector<DiffPoly> polys;
  for (int i = 0; i < 40; ++i) polys.push_back(random_nonzero(rng));
  for (const auto& a : polys) {
    EXPECT_EQ(rank_compare(a, a, kY), RankOrder::Equivalent);
    for (const auto& b : polys) {
      auto ab = rank_compare(a, b, kY);
      auto ba = rank_compare(b, a, kY);
      EXPECT_EQ(ab == RankOrder::Less, ba == RankOrder::Greater);
      EXPECT_EQ(ab == RankOrder::Equivalent, ba == RankOrder::Equivalent);
      for (const auto& c : polys) {
        if (ab == RankOrder::Less && rank_compare(b, c, kY) == RankOrder::Less)
          EXPECT_EQ(rank_compare(a, c, kY), RankOrder::Less);
        if (ab == RankOrder::Equivalent && rank_compare(b, c, kY) == RankOrder::Equivalent)
          EXPECT_EQ(rank_compare(a, c, kY), RankOrder::Equivalent);
      }
    }
  }
}
