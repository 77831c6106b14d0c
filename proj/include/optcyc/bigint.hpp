#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace optcyc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt pow_big(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace optcyc
