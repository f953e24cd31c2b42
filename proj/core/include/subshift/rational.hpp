#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace subshift {

// Expression templates off: values behave like plain value types in auto
// deductions and conditional expressions.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// "p/q", or just "p" for integers.
inline std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& r) { return r.convert_to<double>(); }

}  // namespace subshift
