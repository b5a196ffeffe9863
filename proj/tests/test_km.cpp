#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "fano72/km.hpp"

using namespace fano72;

namespace {

/// Largest profile coefficient for index q, by scanning every split of rank 3
/// and every slope assignment with 1 <= q_i and sum q_i = q.
Rational brute_worst(int q) {
  Rational worst(3);
  auto consider = [&](const std::vector<int>& ranks, const std::vector<int>& qs) {
    // Slopes strictly decreasing.
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
      if (Rational(qs[i], ranks[i]) <= Rational(qs[i + 1], ranks[i + 1])) return;
    }
    // Rank-one first block: 2 q_1 <= q. Rank-two first block: q_1 <= q - 1.
    if (ranks[0] == 1 && 2 * qs[0] > q) return;
    if (ranks[0] == 2 && qs[0] > q - 1) return;
    const HNProfile p(ranks, qs);
    if (Rational(2) - km::profile_deficit(p) / Rational(q * q) <= Rational(0)) return;
    worst = std::max(worst, km::profile_coefficient(p, q));
  };
  for (int a = 1; a < q; ++a) {
    consider({1, 2}, {a, q - a});
    consider({2, 1}, {a, q - a});
    for (int b = 1; a + b < q; ++b) consider({1, 1, 1}, {a, b, q - a - b});
  }
  return worst;
}

}  // namespace

TEST(Km, EpsilonCoefficient) {
  EXPECT_EQ(km::epsilon_coefficient(Rational(1)), Rational(4));
  EXPECT_EQ(km::epsilon_coefficient(Rational(1, 2)), Rational(6));
  EXPECT_THROW(km::epsilon_coefficient(Rational(0)), std::domain_error);
  EXPECT_THROW(km::epsilon_coefficient(Rational(3, 2)), std::domain_error);
}

TEST(Km, ThreefoldCoefficient) {
  EXPECT_EQ(km::threefold_coefficient(5), Rational(16, 5));
  EXPECT_EQ(km::threefold_coefficient(1), Rational(16, 5));
  EXPECT_EQ(km::threefold_coefficient(6), Rational(36, 11));
  EXPECT_EQ(km::threefold_coefficient(7), Rational(196, 59));
  EXPECT_THROW(km::threefold_coefficient(0), std::domain_error);
}

TEST(Km, AdmissibleProfiles) {
  EXPECT_TRUE(km::admissible_profiles(1).empty());
  const auto five = km::admissible_profiles(5);
  ASSERT_EQ(five.size(), 2U);
  EXPECT_EQ(five[0].str(), "ranks(1,2)/q(2,3)");
  EXPECT_EQ(five[1].str(), "ranks(2,1)/q(4,1)");
  bool has_321 = false;
  for (const auto& p : km::admissible_profiles(6)) has_321 = has_321 || p.str() == "ranks(1,1,1)/q(3,2,1)";
  EXPECT_TRUE(has_321);
}

TEST(Km, ProfileCoefficient) {
  EXPECT_EQ(km::profile_coefficient(HNProfile({1, 1, 1}, {3, 2, 1}), 6), Rational(36, 11));
  EXPECT_EQ(km::profile_coefficient(HNProfile({1, 2}, {3, 3}), 6), Rational(16, 5));
  EXPECT_EQ(km::profile_deficit(HNProfile({1, 1, 1}, {3, 2, 1})), Rational(6));
}

TEST(Km, ProfileValidation) {
  EXPECT_THROW(HNProfile({1, 2}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(HNProfile({1}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(HNProfile({0, 3}, {2, 1}), std::invalid_argument);
}

TEST(Km, VerifierSpotValues) {
  const auto checks = km::verify_threefold_coefficient(8);
  ASSERT_EQ(checks.size(), 8U);
  EXPECT_EQ(checks[5].worst, Rational(36, 11));
  ASSERT_TRUE(checks[5].witness.has_value());
  EXPECT_EQ(checks[5].witness->str(), "ranks(1,1,1)/q(3,2,1)");
  EXPECT_EQ(checks[6].worst, Rational(49, 15));
  EXPECT_EQ(checks[6].witness->str(), "ranks(2,1)/q(6,1)");
  EXPECT_EQ(checks[6].claimed, Rational(196, 59));
  EXPECT_FALSE(checks[0].witness.has_value());
}

TEST(Km, VerifierMatchesBruteForce) {
  const auto checks = km::verify_threefold_coefficient(60, 4);
  for (const auto& c : checks) {
    EXPECT_EQ(c.worst, brute_worst(c.q)) << c.q;
    EXPECT_TRUE(c.ok) << c.q;
  }
}

TEST(Km, VerifierIndependentOfThreads) {
  const auto a = km::verify_threefold_coefficient(40, 1);
  const auto b = km::verify_threefold_coefficient(40, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].worst, b[i].worst);
    EXPECT_EQ(a[i].witness, b[i].witness);
  }
}

TEST(Km, SlopeInequalityExamples) {
  const std::vector<int> one{3};
  const std::vector<Rational> flat{Rational(2)};
  EXPECT_TRUE(km::hn_slope_inequality_check(one, flat));
  const std::vector<int> ranks{1, 2};
  const std::vector<Rational> slopes{Rational(3), Rational(3, 2)};
  EXPECT_TRUE(km::hn_slope_inequality_check(ranks, slopes));
  EXPECT_THROW(km::hn_slope_inequality_check(ranks, flat), std::invalid_argument);
}

TEST(Km, ConeInvariants) {
  const auto d1 = km::cone_surface_invariants(1);
  EXPECT_EQ(d1.c1sq, Rational(9));
  EXPECT_EQ(d1.c2hat, Rational(3));
  const auto d2 = km::cone_surface_invariants(2);
  EXPECT_EQ(d2.c1sq, Rational(8));
  EXPECT_EQ(d2.c2hat, Rational(5, 2));
  EXPECT_EQ(d2.epsilon, Rational(1));
  const auto d12 = km::cone_surface_invariants(12);
  EXPECT_EQ(d12.c1sq / d12.c2hat, Rational(196, 25));
  EXPECT_THROW(km::cone_surface_invariants(0), std::domain_error);
}
