#include "fano72/rational.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace fano72 {

namespace {

__extension__ typedef __int128 wide;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal_str() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return str();
  int digits = std::max(twos, fives);
  wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  wide scaled = static_cast<wide>(num_ < 0 ? -num_ : num_) * scale / den_;
  wide int_part = scaled / scale;
  wide frac_part = scaled % scale;
  std::string frac = std::to_string(static_cast<std::int64_t>(frac_part));
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (num_ < 0 ? "-" : "") + std::to_string(static_cast<std::int64_t>(int_part)) + "." + frac;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::int64_t n = parse_int(body.substr(0, slash), text);
    std::string_view den_text = body.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    std::int64_t d = parse_int(den_text, text);
    if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
  }
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_text = body.substr(0, dot);
    std::string_view frac_text = body.substr(dot + 1);
    bool negative = !int_text.empty() && int_text.front() == '-';
    if (negative || (!int_text.empty() && int_text.front() == '+')) int_text.remove_prefix(1);
    if (frac_text.empty() || frac_text.size() > 17 || (int_text.empty() && frac_text.empty())) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    for (char c : frac_text) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    std::int64_t whole = int_text.empty() ? 0 : parse_int(int_text, text);
    std::int64_t frac = parse_int(frac_text, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_text.size(); ++i) scale *= 10;
    Rational r = Rational(whole) + Rational(frac, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(body, text));
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = from_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                    static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = from_wide(static_cast<wide>(num_) * rhs.den_ - static_cast<wide>(rhs.num_) * den_,
                    static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<wide>(num_), den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace fano72
