#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hodgeblocks {

// Coefficients are arbitrary-precision: dimensions grow exponentially in the
// number of colors and the genus, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Monomial exponents. The model only ever produces integer bidegrees.
using Exp = std::int64_t;

inline Int int_pow(Int base, Exp e) {
    Int result = 1;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace hodgeblocks
