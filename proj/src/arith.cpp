#include "fano72/arith.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fano72::arith {

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.push_back({p, a});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::string factorization_str(const Factorization& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& pp : f) {
    if (!s.empty()) s += "*";
    s += std::to_string(pp.prime);
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  return s;
}

Rational sigma_j(std::int64_t j) {
  if (j < 1) throw std::invalid_argument("sigma_j: J must be positive, got " + std::to_string(j));
  Rational sum;
  for (const auto& pp : factorize(j)) {
    const std::int64_t v = pp.value();
    sum += Rational(v) - Rational(1, v);
  }
  return sum;
}

std::vector<std::int64_t> enumerate_j_with_budget(const Rational& budget, Bound bound) {
  std::vector<std::int64_t> out;
  if (!within(Rational(0), budget, bound)) return out;

  // p^a - 1/p^a >= p^a - 1, so no admissible prime power exceeds ceil(budget) + 1.
  const std::int64_t limit = budget.ceil() + 1;
  std::vector<std::vector<std::int64_t>> powers_by_prime;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (factorize(p).size() != 1 || factorize(p).front().exponent != 1) continue;
    std::vector<std::int64_t> powers;
    for (std::int64_t v = p; v <= limit; v *= p) powers.push_back(v);
    powers_by_prime.push_back(std::move(powers));
  }

  std::function<void(std::size_t, std::int64_t, const Rational&)> walk =
      [&](std::size_t idx, std::int64_t product, const Rational& used) {
        if (idx == powers_by_prime.size()) {
          out.push_back(product);
          return;
        }
        walk(idx + 1, product, used);
        for (std::int64_t v : powers_by_prime[idx]) {
          Rational next = used + Rational(v) - Rational(1, v);
          // Terms grow with v, so the first failure ends this prime.
          if (!within(next, budget, bound)) break;
          walk(idx + 1, product * v, next);
        }
      };
  walk(0, 1, Rational(0));

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> square_divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("square_divisors: n must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t existing = out.size();
    std::int64_t step = 1;
    for (int k = 1; 2 * k <= pp.exponent; ++k) {
      step *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * step);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t existing = out.size();
    std::int64_t step = 1;
    for (int k = 1; k <= pp.exponent; ++k) {
      step *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * step);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fano72::arith
