#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bracketkit {

/// Exact rational parameter (epsilon, lambda, eta, ...), kept in lowest terms.
///
/// Threshold tests against integer counts go through floor_mul / ceil_mul so
/// that no comparison ever touches floating point.
class Fraction {
 public:
  Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1);
  explicit Fraction(mpq_class value);

  /// Accepts "p/q", "p" and finite decimals such as "0.75".
  static Fraction parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_positive() const { return sgn(value_) > 0; }

  /// floor(this * n)
  std::int64_t floor_mul(std::int64_t n) const;
  /// ceil(this * n)
  std::int64_t ceil_mul(std::int64_t n) const;

  Fraction pow(unsigned exponent) const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Fraction min(const Fraction& a, const Fraction& b);
Fraction max(const Fraction& a, const Fraction& b);

/// a >= f * b, exactly.
bool count_at_least(std::size_t a, const Fraction& f, std::size_t b);
/// a <= f * b, exactly.
bool count_at_most(std::size_t a, const Fraction& f, std::size_t b);

}  // namespace bracketkit
