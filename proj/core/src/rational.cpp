#include "bracketkit/rational.hpp"

#include "bracketkit/fraction.hpp"

namespace bracketkit {

Rational parse_rational(std::string_view text) { return Fraction::parse(text).value(); }

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace bracketkit
