#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace stc {

/// Exact rational used for every bound and expansion value.
/// Compare only against other Rationals: with C++20 rewritten comparisons,
/// Boost 1.74's mixed `rational == int` overload recurses forever.
using Rational = boost::rational<std::int64_t>;

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Fixed six-decimal rendering for CSV tables.
std::string to_decimal(const Rational& r, int digits = 6);

}  // namespace stc
