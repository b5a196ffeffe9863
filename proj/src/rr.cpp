#include "fano72/rr.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano72::rr {

Rational local_rr_term(const BasketEntry& entry) {
  return Rational(static_cast<std::int64_t>(entry.b()) * (entry.r() - entry.b()), 2 * entry.r());
}

Rational h0_anticanonical(const Rational& c1cubed, const Basket& basket) {
  if (c1cubed.sign() <= 0) throw std::domain_error("h0_anticanonical: degree must be positive, got " + c1cubed.str());
  Rational h0 = c1cubed / Rational(2) + Rational(3);
  for (const auto& e : basket.entries()) h0 -= local_rr_term(e);
  return h0;
}

bool h0_admissible(const Rational& c1cubed, const Basket& basket) {
  const Rational h0 = h0_anticanonical(c1cubed, basket);
  return h0.is_integer() && h0.sign() >= 0;
}

std::vector<DegreeScaled> candidate_degrees(const IndexMultiset& indices, const Rational& lower_inclusive,
                                            const Rational& upper_exclusive) {
  if (!(lower_inclusive < upper_exclusive)) {
    throw std::invalid_argument("candidate_degrees: empty interval [" + lower_inclusive.str() + ", " +
                                upper_exclusive.str() + ")");
  }
  const std::int64_t r_x = basket::gorenstein_index(indices);
  const std::int64_t modulus = 2 * r_x;
  const std::int64_t n_lo = std::max<std::int64_t>(1, (lower_inclusive * Rational(r_x)).ceil());
  const Rational n_hi = upper_exclusive * Rational(r_x);

  std::vector<DegreeScaled> out;
  for (const auto& b : basket::baskets_for_R(indices)) {
    Rational local;
    for (const auto& e : b.entries()) local += local_rr_term(e);
    // 2 r_X * local is an integer because each term has denominator dividing 2r | 2 r_X.
    const Rational shift = local * Rational(modulus);
    const std::int64_t residue = ((shift.num() % modulus) + modulus) % modulus;
    std::int64_t n = n_lo + ((residue - n_lo % modulus) % modulus + modulus) % modulus;
    for (; Rational(n) < n_hi; n += modulus) {
      DegreeScaled d{n, r_x};
      if (h0_admissible(d.degree(), b)) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fano72::rr
