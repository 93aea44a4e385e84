#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace monodyn {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

[[nodiscard]] inline std::string to_string(const BigInt& v) { return v.str(); }

/// "num/den", or just "num" for integers.
[[nodiscard]] inline std::string to_string(const Rational& v) {
  const BigInt den = boost::multiprecision::denominator(v);
  const std::string num = boost::multiprecision::numerator(v).str();
  return den == 1 ? num : num + "/" + den.str();
}

[[nodiscard]] inline double to_double(const Rational& v) { return v.convert_to<double>(); }

[[nodiscard]] inline Rational abs_diff(const Rational& a, const Rational& b) {
  return a > b ? Rational(a - b) : Rational(b - a);
}

}  // namespace monodyn
