#include "fano72/basket.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

namespace fano72 {

BasketEntry::BasketEntry(int r, int b) : r_(r), b_(b) {
  if (r < 2) throw std::invalid_argument("basket entry needs r >= 2, got r=" + std::to_string(r));
  if (b < 1 || 2 * b > r) {
    throw std::invalid_argument("basket entry needs 0 < b <= r/2, got " + std::to_string(r) + ":" + std::to_string(b));
  }
  if (std::gcd(r, b) != 1) {
    throw std::invalid_argument("basket entry needs gcd(b, r) = 1, got " + std::to_string(r) + ":" + std::to_string(b));
  }
}

IndexMultiset::IndexMultiset(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v < 2) throw std::invalid_argument("basket index must be >= 2, got " + std::to_string(v));
  }
  std::sort(values_.begin(), values_.end());
}

std::string IndexMultiset::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(values_[i]);
  }
  return s + "}";
}

std::strong_ordering operator<=>(const IndexMultiset& a, const IndexMultiset& b) {
  if (auto c = a.values_.size() <=> b.values_.size(); c != 0) return c;
  return a.values_ <=> b.values_;
}

Basket::Basket(std::vector<BasketEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

IndexMultiset Basket::indices() const {
  std::vector<int> rs;
  rs.reserve(entries_.size());
  for (const auto& e : entries_) rs.push_back(e.r());
  return IndexMultiset(std::move(rs));
}

std::string Basket::str() const {
  if (entries_.empty()) return "-";
  std::string s;
  for (const auto& e : entries_) {
    if (!s.empty()) s += ",";
    s += std::to_string(e.r()) + ":" + std::to_string(e.b());
  }
  return s;
}

namespace {

int parse_small_int(std::string_view text, std::string_view whole) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed basket '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Basket Basket::parse(std::string_view text) {
  if (text == "-") return Basket{};
  std::vector<BasketEntry> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("malformed basket '" + std::string(text) + "'");
    entries.emplace_back(parse_small_int(item.substr(0, colon), text), parse_small_int(item.substr(colon + 1), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Basket(std::move(entries));
}

namespace basket {

std::int64_t gorenstein_index(const IndexMultiset& indices) {
  std::int64_t l = 1;
  for (int r : indices.values()) l = std::lcm(l, static_cast<std::int64_t>(r));
  return l;
}

Rational sum_r_minus_inv(const IndexMultiset& indices) {
  Rational s;
  for (int r : indices.values()) s += Rational(r) - Rational(1, r);
  return s;
}

Rational c2c1_from_R(const IndexMultiset& indices) {
  const Rational used = sum_r_minus_inv(indices);
  if (used >= Rational(24)) {
    throw NonFanoBudget("indices " + indices.str() + " use " + used.str() + " >= 24 of the Euler budget");
  }
  return Rational(24) - used;
}

std::vector<IndexMultiset> enumerate_R_multisets(const Rational& budget) {
  return enumerate_R_multisets(budget, arith::Bound::strict);
}

std::vector<IndexMultiset> enumerate_R_multisets(const Rational& budget, arith::Bound bound) {
  std::vector<IndexMultiset> out;
  // r - 1/r is increasing in r, and r - 1/r >= r - 1, so r <= ceil(budget) + 1.
  const int r_max = static_cast<int>(budget.ceil()) + 1;
  std::vector<int> current;
  std::function<void(int, const Rational&)> extend = [&](int r_min, const Rational& used) {
    for (int r = r_min; r <= r_max; ++r) {
      Rational next = used + Rational(r) - Rational(1, r);
      if (!arith::within(next, budget, bound)) break;
      current.push_back(r);
      out.emplace_back(current);
      extend(r, next);
      current.pop_back();
    }
  };
  extend(2, Rational(0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> admissible_b(int r) {
  std::vector<int> out;
  for (int b = 1; 2 * b <= r; ++b) {
    if (std::gcd(b, r) == 1) out.push_back(b);
  }
  return out;
}

std::vector<Basket> baskets_for_R(const IndexMultiset& indices) {
  // Distinct b-assignments up to reordering within equal r: walk the sorted
  // indices and keep b non-decreasing inside each run of equal r.
  std::vector<Basket> out;
  const auto& rs = indices.values();
  std::vector<BasketEntry> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t i) {
    if (i == rs.size()) {
      out.emplace_back(chosen);
      return;
    }
    int b_floor = (i > 0 && rs[i] == rs[i - 1]) ? chosen.back().b() : 0;
    for (int b : admissible_b(rs[i])) {
      if (b < b_floor) continue;
      chosen.emplace_back(rs[i], b);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return out;
}

}  // namespace basket
}  // namespace fano72
