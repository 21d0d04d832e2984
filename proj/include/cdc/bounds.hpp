#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdc {

/// Signals that a formula is not claimed for the given parameters.
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact fraction with positive denominator, always reduced.
class Rational {
 public:
  Rational(long long num = 0, long long den = 1);

  long long num() const { return num_; }
  long long den() const { return den_; }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  long long num_;
  long long den_;
};

/// Integer partition function p(r), Euler's pentagonal recurrence.
std::uint64_t partition_count(int r);

/// 4 (e/c)^{2c} (3c+1) p(3c) n^{5c}. c = 0 gives the exact count 3; c = 2 throws NotApplicable.
long double theorem2ii_bound(int n, int c);

/// Checks sum_{i<=k} C(n,i) <= 2^{H(k/n) n} numerically. Requires 1 <= k < n and 2k <= n.
bool entropy_bound_check(int n, int k);
/// The left-hand side, exactly.
std::uint64_t binomial_prefix_sum(int n, int k);

}  // namespace cdc
