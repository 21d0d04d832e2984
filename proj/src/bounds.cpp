#include "cdc/bounds.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace cdc {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator-(const Rational& a, const Rational& b) { return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Rational operator/(const Rational& a, const Rational& b) { return {a.num_ * b.den_, a.den_ * b.num_}; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::uint64_t partition_count(int r) {
  if (r < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(r + 1), 0);
  p[0] = 1;
  for (int i = 1; i <= r; ++i) {
    // Signed sums in two's complement; the final value is non-negative.
    std::uint64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      const int g2 = k * (3 * k + 1) / 2;
      const std::uint64_t term = p[static_cast<std::size_t>(i - g1)] + (g2 <= i ? p[static_cast<std::size_t>(i - g2)] : 0);
      total = (k % 2 == 1) ? total + term : total - term;
    }
    p[static_cast<std::size_t>(i)] = total;
  }
  return p[static_cast<std::size_t>(r)];
}

long double theorem2ii_bound(int n, int c) {
  if (c < 0 || n < 0) throw std::invalid_argument("theorem2ii_bound needs n, c >= 0");
  if (c == 0) return 3.0L;
  if (c == 2) throw NotApplicable("the rare-cycle bound is not claimed for c = 2");
  const long double e = std::exp(1.0L);
  const long double cc = static_cast<long double>(c);
  return 4.0L * std::pow(e / cc, 2.0L * cc) * (3.0L * cc + 1.0L) * static_cast<long double>(partition_count(3 * c)) *
         std::pow(static_cast<long double>(n), 5.0L * cc);
}

std::uint64_t binomial_prefix_sum(int n, int k) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int i = 0; i <= k; ++i) {
    total += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

bool entropy_bound_check(int n, int k) {
  if (k < 1 || k >= n || 2 * k > n) throw std::invalid_argument("entropy_bound_check needs 1 <= k < n and 2k <= n");
  const long double x = static_cast<long double>(k) / static_cast<long double>(n);
  const long double h = -x * std::log2(x) - (1 - x) * std::log2(1 - x);
  const long double rhs = std::exp2(h * static_cast<long double>(n));
  return static_cast<long double>(binomial_prefix_sum(n, k)) <= rhs * (1 + 1e-12L);
}

}  // namespace cdc
