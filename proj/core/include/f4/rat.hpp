#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace f4 {

// The single scalar type of the library. Every computation is exact; there
// is no floating point anywhere in the core.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Canonical serialization, always "numerator/denominator" with a positive
// denominator, e.g. "-3/2", "0/1".
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q"; throws std::invalid_argument on malformed input or
// a zero denominator.
Rat rat_from_string(const std::string& s);

}  // namespace f4
