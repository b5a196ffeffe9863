#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fano72/arith.hpp"
#include "fano72/rational.hpp"

namespace fano72 {

/// A virtual quotient point of type 1/r(1,-1,b): r >= 2, 0 < b <= r/2, gcd(b, r) = 1.
class BasketEntry {
 public:
  /// Throws std::invalid_argument when (r, b) violates the basket constraints.
  BasketEntry(int r, int b);

  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] int b() const { return b_; }

  friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
  friend auto operator<=>(const BasketEntry&, const BasketEntry&) = default;

 private:
  int r_;
  int b_;
};

/// Sorted multiset of basket indices r_i (values >= 2).
///
/// Ordering is canonical: cardinality first, then lexicographic. This is the
/// row order of the enumeration tables.
class IndexMultiset {
 public:
  IndexMultiset() = default;
  /// Throws std::invalid_argument on a value below 2.
  explicit IndexMultiset(std::vector<int> values);

  [[nodiscard]] const std::vector<int>& values() const { return values_; }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  /// "{2,3}"; "{}" when empty.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const IndexMultiset&, const IndexMultiset&) = default;
  friend std::strong_ordering operator<=>(const IndexMultiset& a, const IndexMultiset& b);

 private:
  std::vector<int> values_;
};

/// Reid basket: a multiset of entries, possibly empty (Gorenstein).
class Basket {
 public:
  Basket() = default;
  explicit Basket(std::vector<BasketEntry> entries);

  [[nodiscard]] const std::vector<BasketEntry>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] IndexMultiset indices() const;

  /// "r:b,r:b"; "-" for the empty basket.
  [[nodiscard]] std::string str() const;
  /// Inverse of str(). Throws std::invalid_argument on malformed text or an invalid pair.
  static Basket parse(std::string_view text);

  friend bool operator==(const Basket&, const Basket&) = default;

 private:
  std::vector<BasketEntry> entries_;
};

/// Raised when the basket indices exhaust the Euler characteristic budget of 24.
class NonFanoBudget : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace basket {

/// lcm of the indices; 1 for the empty multiset.
std::int64_t gorenstein_index(const IndexMultiset& indices);

/// Sum of (r - 1/r) over the multiset.
Rational sum_r_minus_inv(const IndexMultiset& indices);

/// c_2(X).c_1(X) = 24 - sum (r - 1/r). Throws NonFanoBudget when the sum reaches 24.
Rational c2c1_from_R(const IndexMultiset& indices);

/// Nonempty multisets with sum (r - 1/r) strictly below `budget`, in canonical order.
std::vector<IndexMultiset> enumerate_R_multisets(const Rational& budget);
/// Same, with the comparison against `budget` chosen by `bound`.
std::vector<IndexMultiset> enumerate_R_multisets(const Rational& budget, arith::Bound bound);

/// b values admissible for index r: 0 < b <= r/2 and gcd(b, r) = 1.
std::vector<int> admissible_b(int r);

/// Every basket whose index multiset is `indices`, one per choice of b for each r.
std::vector<Basket> baskets_for_R(const IndexMultiset& indices);

}  // namespace basket
}  // namespace fano72
