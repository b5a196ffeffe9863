#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano72/rational.hpp"

namespace fano72 {

/// Weights of P(a0, a1, a2, a3), stored sorted ascending.
class WpsWeights {
 public:
  /// Throws std::invalid_argument on a non-positive weight.
  explicit WpsWeights(std::array<std::int64_t, 4> weights);

  [[nodiscard]] const std::array<std::int64_t, 4>& weights() const { return w_; }
  /// "1,6,14,21".
  [[nodiscard]] std::string str() const;
  /// Parses "a0,a1,a2,a3". Throws std::invalid_argument.
  static WpsWeights parse(std::string_view text);

  friend bool operator==(const WpsWeights&, const WpsWeights&) = default;

 private:
  std::array<std::int64_t, 4> w_;
};

namespace wps {

/// Every 3-element subset of the weights has gcd 1.
bool well_formed(const WpsWeights& w);

/// a0 + a1 + a2 + a3. Throws std::invalid_argument if not well-formed.
std::int64_t weil_index(const WpsWeights& w);

/// (sum a)^3 / (a0 a1 a2 a3). Throws std::invalid_argument if not well-formed.
Rational degree(const WpsWeights& w);

/// Spaces whose Gorenstein property is taken as a recorded attribute rather
/// than computed.
struct KnownSpace {
  WpsWeights weights;
  bool gorenstein = false;
  /// Recorded J_A where one is known; not derived from the weights.
  std::optional<std::int64_t> j_a;
  std::string role;
};

const std::vector<KnownSpace>& known_spaces();

}  // namespace wps
}  // namespace fano72
