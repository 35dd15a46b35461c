#pragma once

#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wps {

// Exact arithmetic everywhere: weight products and lcms overflow 64 bits
// quickly, and every threshold in this library is an exact fraction.
// cpp_rational keeps lowest terms with a positive denominator by construction.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of an exact fraction.
inline Integer floor(const Rational& r) {
    Integer num = numerator(r);
    const Integer den = denominator(r); // > 0
    Integer q = num / den;
    if (num < 0 && q * den != num)
        --q;
    return q;
}

/// Smallest integer strictly greater than r.
inline Integer strict_ceil(const Rational& r) { return floor(r) + 1; }

inline std::string to_string(const Integer& n) { return n.str(); }

/// "12/5", or just "12" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Short decimal approximation for text reports; never used in computation.
inline std::string decimal_approx(const Rational& r) {
    const double x = r.convert_to<double>();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace wps
