#include "fano72/wps.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fano72 {

WpsWeights::WpsWeights(std::array<std::int64_t, 4> weights) : w_(weights) {
  for (auto a : w_) {
    if (a < 1) throw std::invalid_argument("weights must be positive, got " + std::to_string(a));
  }
  std::sort(w_.begin(), w_.end());
}

std::string WpsWeights::str() const {
  return std::to_string(w_[0]) + "," + std::to_string(w_[1]) + "," + std::to_string(w_[2]) + "," +
         std::to_string(w_[3]);
}

WpsWeights WpsWeights::parse(std::string_view text) {
  std::array<std::int64_t, 4> w{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t comma = text.find(',', pos);
    if ((i < 3) == (comma == std::string_view::npos)) {
      throw std::invalid_argument("expected four comma-separated weights, got '" + std::string(text) + "'");
    }
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), w[i]);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed weight '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  return WpsWeights(w);
}

namespace wps {

bool well_formed(const WpsWeights& w) {
  const auto& a = w.weights();
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != skip) g = std::gcd(g, a[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

namespace {
void require_well_formed(const WpsWeights& w) {
  if (!well_formed(w)) throw std::invalid_argument("P(" + w.str() + ") is not well-formed");
}
}  // namespace

std::int64_t weil_index(const WpsWeights& w) {
  require_well_formed(w);
  const auto& a = w.weights();
  return a[0] + a[1] + a[2] + a[3];
}

Rational degree(const WpsWeights& w) {
  const std::int64_t s = weil_index(w);
  const auto& a = w.weights();
  return Rational(s * s * s, a[0] * a[1] * a[2] * a[3]);
}

const std::vector<KnownSpace>& known_spaces() {
  static const std::vector<KnownSpace> spaces{
      {WpsWeights({1, 1, 1, 3}), true, std::nullopt, "equality case, Q-Fano index 6"},
      {WpsWeights({1, 1, 4, 6}), true, std::nullopt, "equality case, Q-Fano index 12"},
      {WpsWeights({1, 6, 14, 21}), true, 42, "J_A = q_W = r_X (-K)^3 = 42"},
  };
  return spaces;
}

}  // namespace wps
}  // namespace fano72
