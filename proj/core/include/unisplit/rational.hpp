#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace unisplit {

// All solver arithmetic is exact. Rationals are kept in lowest terms with a
// positive denominator (guaranteed by the backing type).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with any-sign den; throws input_error on den == 0.
Rational make_rational(const Int& num, const Int& den);

Int floor_rat(const Rational& v);
Int ceil_rat(const Rational& v);

// Accepts "7", "-3", "3/2", "-5/4", "1.5", ".25".
Rational parse_rational(std::string_view text);

// "3/2" for non-integers, "7" for integers.
std::string fraction_string(const Rational& v);

// Plain decimal rendering rounded to `significant` digits, trailing zeros
// trimmed ("11", "5.5", "0.333333333333"). Round half away from zero.
std::string decimal_string(const Rational& v, int significant = 12);

}  // namespace unisplit
