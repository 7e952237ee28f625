#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace moser {

// Exact arbitrary-precision rationals back the whole symbolic layer;
// binary64 enters only at evaluation time.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// base^exp with exp possibly negative; base must be nonzero for exp < 0.
Rational rational_pow(const Rational& base, long exp);

std::string to_string(const Rational& q);

// FNV-1a 64-bit over bytes; used for content digests of canonicalized inputs.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace moser
