#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fano72/basket.hpp"
#include "fano72/rational.hpp"

namespace fano72 {

/// Anticanonical degree carried as the integer N = r_X * c_1^3.
struct DegreeScaled {
  std::int64_t n = 0;
  std::int64_t r_x = 1;

  [[nodiscard]] Rational degree() const { return Rational(n, r_x); }
  /// "N/rX", unreduced.
  [[nodiscard]] std::string str() const { return std::to_string(n) + "/" + std::to_string(r_x); }

  friend bool operator==(const DegreeScaled&, const DegreeScaled&) = default;
  friend auto operator<=>(const DegreeScaled&, const DegreeScaled&) = default;
};

namespace rr {

/// b(r - b) / (2r), the local correction of one basket point.
Rational local_rr_term(const BasketEntry& entry);

/// h^0(-K) = c1^3/2 + 3 - sum of local terms. Throws std::domain_error unless c1cubed > 0.
Rational h0_anticanonical(const Rational& c1cubed, const Basket& basket);

/// Whether h^0 is a non-negative integer.
bool h0_admissible(const Rational& c1cubed, const Basket& basket);

/// All N with lower <= N/r_X < upper for which some basket over `indices`
/// gives an admissible h^0, ascending and duplicate-free.
///
/// For a fixed basket with local sum s, h^0 is integral exactly when
/// N = 2 r_X (h^0 - 3 + s), so admissible N form one residue class modulo
/// 2 r_X; each class is stepped through directly.
std::vector<DegreeScaled> candidate_degrees(const IndexMultiset& indices, const Rational& lower_inclusive,
                                            const Rational& upper_exclusive);

}  // namespace rr
}  // namespace fano72
