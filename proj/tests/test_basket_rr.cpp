#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "fano72/basket.hpp"
#include "fano72/rr.hpp"
#include "oracles.hpp"

using namespace fano72;

TEST(BasketEntry, Validation) {
  EXPECT_NO_THROW(BasketEntry(2, 1));
  EXPECT_NO_THROW(BasketEntry(5, 2));
  EXPECT_THROW(BasketEntry(1, 1), std::invalid_argument);
  EXPECT_THROW(BasketEntry(3, 2), std::invalid_argument);
  EXPECT_THROW(BasketEntry(4, 2), std::invalid_argument);
  EXPECT_THROW(BasketEntry(5, 0), std::invalid_argument);
}

TEST(Basket, ParseAndPrint) {
  const auto b = Basket::parse("3:1,2:1");
  EXPECT_EQ(b.str(), "2:1,3:1");
  EXPECT_EQ(b.indices().str(), "{2,3}");
  EXPECT_TRUE(Basket::parse("-").empty());
  EXPECT_EQ(Basket::parse("-").str(), "-");
  EXPECT_THROW(Basket::parse("2"), std::invalid_argument);
  EXPECT_THROW(Basket::parse("2:x"), std::invalid_argument);
  EXPECT_THROW(Basket::parse("4:2"), std::invalid_argument);
  EXPECT_THROW(Basket::parse(""), std::invalid_argument);
}

TEST(IndexMultiset, CanonicalOrder) {
  EXPECT_LT(IndexMultiset({6}), IndexMultiset({2, 2}));
  EXPECT_LT(IndexMultiset({2, 3}), IndexMultiset({2, 4}));
  EXPECT_EQ(IndexMultiset({3, 2}).str(), "{2,3}");
  EXPECT_THROW(IndexMultiset({1}), std::invalid_argument);
}

TEST(BasketInvariants, GorensteinIndexAndC2C1) {
  EXPECT_EQ(basket::gorenstein_index(IndexMultiset({2, 3})), 6);
  EXPECT_EQ(basket::gorenstein_index(IndexMultiset{}), 1);
  EXPECT_EQ(basket::c2c1_from_R(IndexMultiset({2})), Rational(45, 2));
  EXPECT_EQ(basket::c2c1_from_R(IndexMultiset({2, 3})), Rational(119, 6));
  EXPECT_EQ(basket::c2c1_from_R(IndexMultiset{}), Rational(24));
  EXPECT_THROW(basket::c2c1_from_R(IndexMultiset({25})), NonFanoBudget);
}

TEST(EnumerateR, BudgetSixGivesElevenRows) {
  const auto sets = basket::enumerate_R_multisets(Rational(6));
  std::vector<std::string> names;
  for (const auto& s : sets) names.push_back(s.str());
  const std::vector<std::string> expected{"{2}",   "{3}",   "{4}",   "{5}",     "{6}",    "{2,2}",
                                          "{2,3}", "{2,4}", "{3,3}", "{2,2,2}", "{2,2,3}"};
  EXPECT_EQ(names, expected);
}

TEST(EnumerateR, MatchesNestedLoops) {
  for (int twice = 1; twice <= 20; ++twice) {
    const Rational budget(twice, 2);
    std::set<std::vector<int>> got;
    for (const auto& s : basket::enumerate_R_multisets(budget)) got.insert(s.values());
    const auto brute = oracle::index_multisets(budget, 20, 12);
    EXPECT_EQ(got, std::set<std::vector<int>>(brute.begin(), brute.end())) << budget.str();
  }
}

TEST(EnumerateR, InclusiveBound) {
  EXPECT_TRUE(basket::enumerate_R_multisets(Rational(3, 2)).empty());
  const auto inclusive = basket::enumerate_R_multisets(Rational(3, 2), arith::Bound::inclusive);
  ASSERT_EQ(inclusive.size(), 1U);
  EXPECT_EQ(inclusive[0].str(), "{2}");
}

TEST(AdmissibleB, Values) {
  EXPECT_EQ(basket::admissible_b(2), std::vector<int>{1});
  EXPECT_EQ(basket::admissible_b(5), (std::vector<int>{1, 2}));
  EXPECT_EQ(basket::admissible_b(6), std::vector<int>{1});
  EXPECT_EQ(basket::admissible_b(7), (std::vector<int>{1, 2, 3}));
}

TEST(BasketsForR, MultisetDistinct) {
  EXPECT_EQ(basket::baskets_for_R(IndexMultiset({5})).size(), 2U);
  // {5,5}: (1,1), (1,2), (2,2).
  EXPECT_EQ(basket::baskets_for_R(IndexMultiset({5, 5})).size(), 3U);
  EXPECT_EQ(basket::baskets_for_R(IndexMultiset({2, 5})).size(), 2U);
  EXPECT_EQ(basket::baskets_for_R(IndexMultiset{}).size(), 1U);
}

TEST(RiemannRoch, Examples) {
  EXPECT_EQ(rr::h0_anticanonical(Rational(145, 2), Basket::parse("2:1")), Rational(39));
  EXPECT_EQ(rr::h0_anticanonical(Rational(72), Basket{}), Rational(39));
  EXPECT_EQ(rr::h0_anticanonical(Rational(72), Basket::parse("2:1")), Rational(155, 4));
  EXPECT_FALSE(rr::h0_admissible(Rational(72), Basket::parse("2:1")));
  EXPECT_TRUE(rr::h0_admissible(Rational(145, 2), Basket::parse("2:1")));
  EXPECT_EQ(rr::local_rr_term(BasketEntry(2, 1)), Rational(1, 4));
  EXPECT_THROW(rr::h0_anticanonical(Rational(0), Basket{}), std::domain_error);
}

TEST(CandidateDegrees, TableOneRows) {
  auto ns = [](const std::vector<int>& rs) {
    const IndexMultiset r(rs);
    std::vector<std::int64_t> out;
    for (const auto& d : rr::candidate_degrees(r, Rational(72), Rational(4) * basket::c2c1_from_R(r))) {
      out.push_back(d.n);
    }
    return out;
  };
  EXPECT_EQ(ns({2, 4}), std::vector<std::int64_t>{293});
  EXPECT_EQ(ns({2, 2}), (std::vector<std::int64_t>{146, 150, 154, 158, 162, 166}));
  EXPECT_EQ(ns({5}), (std::vector<std::int64_t>{364, 366, 374, 376}));
  EXPECT_TRUE(ns({6}).empty());
  EXPECT_TRUE(ns({2, 2, 3}).empty());
}

TEST(CandidateDegrees, MatchOracleOnEveryRow) {
  for (const auto& r : basket::enumerate_R_multisets(Rational(6))) {
    const std::int64_t r_x = basket::gorenstein_index(r);
    const Rational hi = Rational(4) * basket::c2c1_from_R(r) * Rational(r_x);
    std::vector<std::int64_t> got;
    for (const auto& d : rr::candidate_degrees(r, Rational(72), Rational(4) * basket::c2c1_from_R(r))) {
      EXPECT_EQ(d.r_x, r_x);
      got.push_back(d.n);
    }
    EXPECT_EQ(got, oracle::candidates(r.values(), r_x, 72 * r_x, hi.ceil())) << r.str();
  }
}
