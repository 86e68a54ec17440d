#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qtree {

// Exact rational scalar. Every symbolic identity handled by the engine has
// integer coefficients, but linear elimination over ideal slices produces
// genuine fractions, so coefficients are arbitrary-precision throughout.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace qtree
