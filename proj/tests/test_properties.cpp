#include <gtest/gtest.h>

#include <random>

#include "fano72/indices.hpp"
#include "fano72/km.hpp"
#include "fano72/pipeline.hpp"

using namespace fano72;

TEST(Property, SlopeInequalityRandomProfiles) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> rank(1, 5);
  std::uniform_int_distribution<int> step_num(1, 40);
  std::uniform_int_distribution<int> step_den(1, 12);
  std::uniform_int_distribution<int> start(-20, 20);
  for (int i = 0; i < 10000; ++i) {
    const int l = len(rng);
    std::vector<int> ranks;
    std::vector<Rational> slopes;
    Rational mu(start(rng), step_den(rng));
    for (int k = 0; k < l; ++k) {
      ranks.push_back(rank(rng));
      slopes.push_back(mu);
      mu -= Rational(step_num(rng), step_den(rng));
    }
    ASSERT_TRUE(km::hn_slope_inequality_check(ranks, slopes)) << i;
  }
}

TEST(Property, SlopeInequalityEqualityForTwoBlocks) {
  const std::vector<int> ranks{2, 3};
  const std::vector<Rational> slopes{Rational(5, 2), Rational(1, 3)};
  EXPECT_TRUE(km::hn_slope_inequality_check(ranks, slopes));
}

TEST(Property, BudgetJ2BelowJ1OnEveryCase) {
  const auto table1 = pipeline::build_table1();
  int checked = 0;
  for (const auto& row : table1) {
    for (auto n : row.candidates) {
      for (std::int64_t q = 6; q <= 200; ++q) {
        ASSERT_LT(indices::budget_J2(row.rx_c2c1, n, q), indices::budget_J1(row.rx_c2c1, n));
        ++checked;
      }
    }
  }
  for (std::int64_t c = 74; c <= 94; c += 2) {
    for (std::int64_t q = 6; q <= 200; ++q) ASSERT_LT(indices::budget_J2(24, c, q), indices::budget_J1(24, c));
  }
  EXPECT_GT(checked, 0);
}

TEST(Property, J1FailureImpliesJ2Failure) {
  pipeline::Options o;
  for (auto mode : {pipeline::Mode::strict, pipeline::Mode::paper}) {
    o.mode = mode;
    const auto cert = pipeline::certify_all(o);
    for (const auto& r : cert.records) {
      if (r.eliminated_by != "j1" || r.q < 6) continue;
      const std::int64_t rx_c2c1 = r.branch == "gorenstein" ? 24 : [&] {
        for (const auto& row : cert.table1) {
          if (row.indices == r.indices) return row.rx_c2c1;
        }
        return std::int64_t{0};
      }();
      EXPECT_FALSE(indices::passes_J2(r.j_a, indices::budget_J2(rx_c2c1, r.n, r.q)));
    }
  }
}

TEST(Property, VerifierUpToTwoHundred) {
  const auto checks = km::verify_threefold_coefficient(200, 0);
  ASSERT_EQ(checks.size(), 200U);
  for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.q;
}

TEST(Property, ConeNefSlackAndRatio) {
  for (int d = 1; d <= 100; ++d) EXPECT_EQ(km::cone_surface_invariants(d).nef_slack, Rational(0)) << d;
  const auto c = km::cone_surface_invariants(400);
  EXPECT_GT(c.c1sq / c.c2hat, Rational(100));
}
