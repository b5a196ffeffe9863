#include "fano72/km.hpp"

#include <numeric>
#include <stdexcept>

#include "fano72/parallel.hpp"

namespace fano72 {

HNProfile::HNProfile(std::vector<int> ranks, std::vector<int> slope_numerators)
    : ranks_(std::move(ranks)), q_(std::move(slope_numerators)) {
  if (ranks_.empty() || ranks_.size() != q_.size()) {
    throw std::invalid_argument("HN profile needs equal, nonempty rank and slope lists");
  }
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] < 1 || q_[i] < 1) throw std::invalid_argument("HN profile entries must be positive: " + str());
    if (i > 0 && !(Rational(q_[i - 1], ranks_[i - 1]) > Rational(q_[i], ranks_[i]))) {
      throw std::invalid_argument("HN profile slopes must strictly decrease: " + str());
    }
  }
}

int HNProfile::total_rank() const { return std::accumulate(ranks_.begin(), ranks_.end(), 0); }
int HNProfile::total_index() const { return std::accumulate(q_.begin(), q_.end(), 0); }

std::string HNProfile::str() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "ranks(" + join(ranks_) + ")/q(" + join(q_) + ")";
}

namespace km {

Rational epsilon_coefficient(const Rational& eps) {
  if (eps.sign() <= 0 || eps > Rational(1)) {
    throw std::domain_error("epsilon must lie in (0, 1], got " + eps.str());
  }
  return Rational(2) * (Rational(1) + eps) / eps;
}

Rational threefold_coefficient(int q) {
  if (q < 1) throw std::domain_error("Q-Fano index must be positive, got " + std::to_string(q));
  if (q <= 5) return Rational(16, 5);
  const std::int64_t qq = static_cast<std::int64_t>(q) * q;
  return Rational(4 * qq, qq + 2 * q - 4);
}

std::vector<HNProfile> admissible_profiles(int q) {
  std::vector<HNProfile> out;
  // ranks (1,2): rank-one destabilising subsheaf.
  for (int q1 = 1; q1 < q; ++q1) {
    if (3 * q1 > q && 2 * q1 <= q) out.emplace_back(std::vector{1, 2}, std::vector{q1, q - q1});
  }
  // ranks (2,1).
  for (int q1 = 1; q1 <= q - 1; ++q1) {
    if (3 * q1 > 2 * q) out.emplace_back(std::vector{2, 1}, std::vector{q1, q - q1});
  }
  // ranks (1,1,1).
  for (int q1 = 1; 2 * q1 <= q; ++q1) {
    for (int q2 = 1; q2 < q1; ++q2) {
      const int q3 = q - q1 - q2;
      if (q3 >= 1 && q3 < q2) out.emplace_back(std::vector{1, 1, 1}, std::vector{q1, q2, q3});
    }
  }
  return out;
}

Rational profile_deficit(const HNProfile& profile) {
  const auto& r = profile.ranks();
  const auto& q = profile.slope_numerators();
  Rational d;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const Rational gap = Rational(q[i], r[i]) - Rational(q[j], r[j]);
      d += Rational(static_cast<std::int64_t>(r[i]) * r[j]) * gap * gap;
    }
  }
  return d;
}

Rational profile_coefficient(const HNProfile& profile, int q) {
  if (q < 1) throw std::domain_error("Q-Fano index must be positive, got " + std::to_string(q));
  const Rational denom = Rational(2) - profile_deficit(profile) / Rational(static_cast<std::int64_t>(q) * q);
  if (denom.sign() <= 0) {
    throw std::domain_error("profile " + profile.str() + " gives no bound: deficit reaches 2q^2");
  }
  return Rational(6) / denom;
}

std::vector<CoefficientCheck> verify_threefold_coefficient(int q_max, unsigned threads) {
  if (q_max < 1) throw std::domain_error("q_max must be positive");
  return parallel_map(static_cast<std::size_t>(q_max), threads, [](std::size_t i) {
    const int q = static_cast<int>(i) + 1;
    CoefficientCheck check;
    check.q = q;
    check.worst = Rational(3);  // semistable tangent sheaf
    for (const auto& p : admissible_profiles(q)) {
      Rational c = profile_coefficient(p, q);
      if (c > check.worst) {
        check.worst = c;
        check.witness = p;
      }
    }
    check.claimed = threefold_coefficient(q);
    check.ok = check.worst <= check.claimed;
    return check;
  });
}

bool hn_slope_inequality_check(std::span<const int> ranks, std::span<const Rational> slopes) {
  if (ranks.size() != slopes.size() || ranks.empty()) {
    throw std::invalid_argument("hn_slope_inequality_check: ranks and slopes must match and be nonempty");
  }
  Rational r_total;
  Rational weighted;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    r_total += Rational(ranks[i]);
    weighted += Rational(ranks[i]) * slopes[i];
  }
  const Rational mu = weighted / r_total;
  const Rational lhs = r_total * r_total * (slopes.front() - mu) * (mu - slopes.back());
  Rational rhs;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    for (std::size_t j = i + 1; j < ranks.size(); ++j) {
      const Rational gap = slopes[i] - slopes[j];
      rhs += Rational(ranks[i]) * Rational(ranks[j]) * gap * gap;
    }
  }
  return lhs >= rhs;
}

ConeInvariants cone_surface_invariants(int d) {
  if (d < 1) throw std::domain_error("cone degree must be positive, got " + std::to_string(d));
  ConeInvariants c;
  c.epsilon = Rational(2, d);
  c.c1sq = Rational(static_cast<std::int64_t>(d + 2) * (d + 2), d);
  c.c2hat = Rational(2 * d + 1, d);
  c.nef_slack = Rational(d + 2) - (Rational(1) + c.epsilon) * Rational(d);
  return c;
}

}  // namespace km
}  // namespace fano72
