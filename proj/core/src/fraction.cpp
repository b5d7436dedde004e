#include "bracketkit/fraction.hpp"

#include <cctype>

#include "bracketkit/errors.hpp"

namespace bracketkit {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("fraction with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Fraction::Fraction(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto p = s.substr(0, slash);
    const auto d = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(d)) throw InputError("malformed rational '" + std::string(text) + "'");
    mpz_class den(std::string(d), 10);
    if (den == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(p), 10), den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw InputError("malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = mpq_class(digits, scale);
  } else {
    if (!all_digits(s)) throw InputError("malformed rational '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Fraction(q);
}

std::string Fraction::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Fraction::floor_mul(std::int64_t n) const {
  mpz_class prod = value_.get_num() * mpz_class(static_cast<long>(n));
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), prod.get_mpz_t(), value_.get_den_mpz_t());
  return out.get_si();
}

std::int64_t Fraction::ceil_mul(std::int64_t n) const {
  mpz_class prod = value_.get_num() * mpz_class(static_cast<long>(n));
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), prod.get_mpz_t(), value_.get_den_mpz_t());
  return out.get_si();
}

Fraction Fraction::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Fraction(mpq_class(num, den));
}

Fraction operator+(const Fraction& a, const Fraction& b) { return Fraction(mpq_class(a.value_ + b.value_)); }
Fraction operator-(const Fraction& a, const Fraction& b) { return Fraction(mpq_class(a.value_ - b.value_)); }
Fraction operator*(const Fraction& a, const Fraction& b) { return Fraction(mpq_class(a.value_ * b.value_)); }
Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.is_zero()) throw InputError("division by zero fraction");
  return Fraction(mpq_class(a.value_ / b.value_));
}

Fraction min(const Fraction& a, const Fraction& b) { return b < a ? b : a; }
Fraction max(const Fraction& a, const Fraction& b) { return a < b ? b : a; }

bool count_at_least(std::size_t a, const Fraction& f, std::size_t b) {
  // a * den >= num * b
  return mpz_class(static_cast<unsigned long>(a)) * f.value().get_den() >=
         f.value().get_num() * mpz_class(static_cast<unsigned long>(b));
}

bool count_at_most(std::size_t a, const Fraction& f, std::size_t b) {
  return mpz_class(static_cast<unsigned long>(a)) * f.value().get_den() <=
         f.value().get_num() * mpz_class(static_cast<unsigned long>(b));
}

}  // namespace bracketkit
