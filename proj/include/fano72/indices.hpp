#pragma once

#include <cstdint>
#include <string>

#include "fano72/rational.hpp"
#include "fano72/rr.hpp"

namespace fano72 {

/// Du Val type of a singular curve: A_n (n >= 1), D_m (m >= 4), E6, E7, E8.
class SingularityClass {
 public:
  enum class Kind { A, D, E6, E7, E8 };

  static SingularityClass A(int n);
  static SingularityClass D(int m);
  static SingularityClass E6() { return SingularityClass(Kind::E6, 6); }
  static SingularityClass E7() { return SingularityClass(Kind::E7, 7); }
  static SingularityClass E8() { return SingularityClass(Kind::E8, 8); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int parameter() const { return param_; }
  [[nodiscard]] std::string str() const;

 private:
  SingularityClass(Kind kind, int param) : kind_(kind), param_(param) {}
  Kind kind_;
  int param_;
};

/// Fano indices of one variety; q_W must divide q_Q.
struct IndexData {
  std::int64_t q_w = 1;
  std::int64_t q_q = 1;
  std::int64_t j_a = 1;

  /// Throws std::invalid_argument unless all are positive and q_w | q_q.
  void validate() const;
};

namespace indices {

/// e: 1 + number of exceptional curves; g: order of the local fundamental
/// group; j: order of the local class group.
struct EGJ {
  int e = 0;
  int g = 0;
  int j = 0;
  friend bool operator==(const EGJ&, const EGJ&) = default;
};

EGJ egj(const SingularityClass& c);

/// j - 1/j <= e - 1/g, exactly.
bool check_j_bound(const SingularityClass& c);

/// Whether J_A r^(n-2) (-K)^n / q^2 is an integer, where (-K)^n = N.n / N.r_x.
/// For n = 3 with N.r_x = r_X this is q^2 | J_A N.
bool integrality_holds(std::int64_t j_a, std::int64_t r_x, const DegreeScaled& degree, std::int64_t q, int dim);

/// q | r_X^(n-2) (-K)^n for n = 3, i.e. q | N.
bool weil_divisibility(std::int64_t q, const DegreeScaled& degree);

/// r_X c2c1 - N/4.
Rational budget_J1(std::int64_t rx_c2c1, std::int64_t n);

/// r_X c2c1 - (q^2 + 2q - 4) N / (4 q^2). Throws std::domain_error for q < 6.
Rational budget_J2(std::int64_t rx_c2c1, std::int64_t n, std::int64_t q);

/// sigma_j(J) < budget.
bool passes_J1(std::int64_t j_a, const Rational& budget);
/// sigma_j(J) <= budget.
bool passes_J2(std::int64_t j_a, const Rational& budget);

}  // namespace indices
}  // namespace fano72
