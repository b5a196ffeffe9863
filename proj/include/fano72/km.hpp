#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fano72/rational.hpp"

namespace fano72 {

/// Integer slope data of a Harder-Narasimhan filtration of the tangent sheaf.
///
/// Block i has rank ranks[i] and c_1 equal to q[i] times the ample generator;
/// slopes q[i]/ranks[i] strictly decrease.
class HNProfile {
 public:
  /// Throws std::invalid_argument on mismatched lengths, non-positive entries
  /// or non-decreasing slopes.
  HNProfile(std::vector<int> ranks, std::vector<int> slope_numerators);

  [[nodiscard]] const std::vector<int>& ranks() const { return ranks_; }
  [[nodiscard]] const std::vector<int>& slope_numerators() const { return q_; }
  [[nodiscard]] std::size_t length() const { return ranks_.size(); }
  [[nodiscard]] int total_rank() const;
  [[nodiscard]] int total_index() const;

  /// "ranks(1,2)/q(3,3)".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const HNProfile&, const HNProfile&) = default;

 private:
  std::vector<int> ranks_;
  std::vector<int> q_;
};

namespace km {

/// 2(1 + eps)/eps. Throws std::domain_error unless 0 < eps <= 1.
Rational epsilon_coefficient(const Rational& eps);

/// 16/5 for q <= 5, else 4q^2/(q^2 + 2q - 4). Throws std::domain_error for q < 1.
Rational threefold_coefficient(int q);

/// Non-semistable profiles of rank 3 and index q allowed by the slope constraints:
/// ranks (1,2) with 3q_1 > q and 2q_1 <= q; ranks (2,1) with 3q_1 > 2q and
/// q_1 <= q - 1; ranks (1,1,1) with q_1 > q_2 > q_3 >= 1 and 2q_1 <= q.
std::vector<HNProfile> admissible_profiles(int q);

/// D = sum_{i<j} r_i r_j (q_i/r_i - q_j/r_j)^2.
Rational profile_deficit(const HNProfile& profile);

/// 6 / (2 - D/q^2): the bound on c_1^3 / (c2hat . c_1) implied by the profile.
/// Throws std::domain_error when D >= 2q^2 (no bound).
Rational profile_coefficient(const HNProfile& profile, int q);

struct CoefficientCheck {
  int q = 0;
  Rational worst;
  /// Profile attaining `worst`; empty when the semistable value 3 is the maximum.
  std::optional<HNProfile> witness;
  Rational claimed;
  bool ok = false;
};

/// For q = 1..q_max, compares the largest profile coefficient (semistable 3
/// included) with threefold_coefficient(q). Runs per q on up to `threads`
/// workers (0 = hardware concurrency); output order is by q regardless.
std::vector<CoefficientCheck> verify_threefold_coefficient(int q_max, unsigned threads = 1);

/// r^2 (mu_max - mu)(mu - mu_min) >= sum_{i<j} r_i r_j (mu_i - mu_j)^2 with
/// r = sum r_i and mu the rank-weighted mean slope.
bool hn_slope_inequality_check(std::span<const int> ranks, std::span<const Rational> slopes);

struct ConeInvariants {
  Rational epsilon;
  Rational c1sq;
  Rational c2hat;
  Rational nef_slack;
};

/// Invariants of the cone P(1,1,d), normalised so that c_1(O(1))^2 = 1/d.
ConeInvariants cone_surface_invariants(int d);

}  // namespace km
}  // namespace fano72
