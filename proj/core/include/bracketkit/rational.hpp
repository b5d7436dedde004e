#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bracketkit {

/// Arbitrary-precision rational coordinate.
using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal into a canonical rational.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace bracketkit
