#pragma once

#include <cstdint>
#include <vector>

#include "fano72/rational.hpp"

namespace fano72::arith {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  [[nodiscard]] std::int64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing. Empty for 1.
using Factorization = std::vector<PrimePower>;

/// Whether a budget comparison is "<" or "<=".
enum class Bound { strict, inclusive };

/// Trial-division factorization. Throws std::invalid_argument for n < 1.
Factorization factorize(std::int64_t n);

/// Renders "2^5*7"; "1" for the empty factorization.
std::string factorization_str(const Factorization& f);

/// Sum over the maximal prime powers p^a of J of (p^a - 1/p^a).
Rational sigma_j(std::int64_t j);

/// Every J >= 1 with sigma_j(J) < budget (strict) or <= budget (inclusive),
/// ascending. Empty when no J qualifies (budget <= 0, or budget == 0 strict).
std::vector<std::int64_t> enumerate_j_with_budget(const Rational& budget, Bound bound);

/// All m >= 1 with m^2 | n, ascending.
std::vector<std::int64_t> square_divisors(std::int64_t n);

/// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Compares `lhs` against `rhs` using the given bound: lhs < rhs or lhs <= rhs.
inline bool within(const Rational& lhs, const Rational& rhs, Bound bound) {
  return bound == Bound::strict ? lhs < rhs : lhs <= rhs;
}

}  // namespace fano72::arith
