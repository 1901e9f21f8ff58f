#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tarc {

/// Exact group orders. Example instances reach ~10^58, well past 64 bits.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt big_pow(const BigInt& base, unsigned exponent)
{
  return boost::multiprecision::pow(base, exponent);
}

} // namespace tarc
