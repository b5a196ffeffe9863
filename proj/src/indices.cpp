#include "fano72/indices.hpp"

#include <stdexcept>

#include "fano72/arith.hpp"

namespace fano72 {

SingularityClass SingularityClass::A(int n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1, got " + std::to_string(n));
  return SingularityClass(Kind::A, n);
}

SingularityClass SingularityClass::D(int m) {
  if (m < 4) throw std::invalid_argument("D_m needs m >= 4, got " + std::to_string(m));
  return SingularityClass(Kind::D, m);
}

std::string SingularityClass::str() const {
  switch (kind_) {
    case Kind::A: return "A" + std::to_string(param_);
    case Kind::D: return "D" + std::to_string(param_);
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
    case Kind::E8: return "E8";
  }
  return "?";
}

void IndexData::validate() const {
  if (q_w < 1 || q_q < 1 || j_a < 1) throw std::invalid_argument("Fano indices must be positive");
  if (q_q % q_w != 0) {
    throw std::invalid_argument("Weil-Fano index " + std::to_string(q_w) + " must divide Q-Fano index " +
                                std::to_string(q_q));
  }
}

namespace indices {

EGJ egj(const SingularityClass& c) {
  const int p = c.parameter();
  switch (c.kind()) {
    case SingularityClass::Kind::A: return {p + 1, p + 1, p + 1};
    case SingularityClass::Kind::D: return {p + 1, 4 * p - 8, 4};
    case SingularityClass::Kind::E6: return {7, 24, 3};
    case SingularityClass::Kind::E7: return {8, 48, 2};
    case SingularityClass::Kind::E8: return {9, 120, 1};
  }
  throw std::logic_error("unknown singularity kind");
}

bool check_j_bound(const SingularityClass& c) {
  const EGJ v = egj(c);
  return Rational(v.j) - Rational(1, v.j) <= Rational(v.e) - Rational(1, v.g);
}

bool integrality_holds(std::int64_t j_a, std::int64_t r_x, const DegreeScaled& degree, std::int64_t q, int dim) {
  if (j_a < 1 || r_x < 1 || q < 1 || degree.n < 1 || degree.r_x < 1) {
    throw std::invalid_argument("integrality_holds: inputs must be positive");
  }
  if (dim < 2) throw std::invalid_argument("integrality_holds: dimension must be >= 2");
  Rational value = Rational(j_a) * degree.degree() / Rational(q * q);
  for (int i = 0; i < dim - 2; ++i) value *= Rational(r_x);
  return value.is_integer();
}

bool weil_divisibility(std::int64_t q, const DegreeScaled& degree) {
  if (q < 1) throw std::invalid_argument("weil_divisibility: q must be positive");
  return degree.n % q == 0;
}

Rational budget_J1(std::int64_t rx_c2c1, std::int64_t n) { return Rational(rx_c2c1) - Rational(n, 4); }

Rational budget_J2(std::int64_t rx_c2c1, std::int64_t n, std::int64_t q) {
  if (q < 6) throw std::domain_error("budget_J2 needs q >= 6, got " + std::to_string(q));
  return Rational(rx_c2c1) - Rational((q * q + 2 * q - 4) * n, 4 * q * q);
}

bool passes_J1(std::int64_t j_a, const Rational& budget) { return arith::sigma_j(j_a) < budget; }

bool passes_J2(std::int64_t j_a, const Rational& budget) { return arith::sigma_j(j_a) <= budget; }

}  // namespace indices
}  // namespace fano72
