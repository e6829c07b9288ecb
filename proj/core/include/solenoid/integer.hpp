#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace solenoid {

// Products of bonding primes and k^m - 1 outgrow machine words quickly, so
// every quantity that can grow is arbitrary precision.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sequence terms are stored as machine words; products of them are Integer.
using Prime = std::uint64_t;

inline std::string to_string(const Integer& v) { return v.str(); }

// Always "num/den", including integers ("0/1", "1/1").
std::string to_string(const Rational& v);

// Least non-negative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace solenoid
