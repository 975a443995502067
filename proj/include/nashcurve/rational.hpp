#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "nashcurve/errors.hpp"

namespace nashcurve {

using Int = boost::multiprecision::cpp_int;

// Exact rational coefficient field. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form
// this library relies on.
using Rational = boost::multiprecision::cpp_rational;

inline bool rational_canonical(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den <= 0) return false;
    if (num == 0) return den == 1;
    return boost::multiprecision::gcd(num, den) == 1;
}

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// cpp_rational's two-argument constructor rejects negative denominators;
// this normalizes the sign instead.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// Accepts "n" or "n/d" with an optional leading sign.
inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw DomainError("invalid rational literal: " + text);
    }
}

// s (s-1) ... (s-j+1); zero when j exceeds s for nonnegative s.
inline Int falling_factorial(long long s, long long j) {
    Int r = 1;
    for (long long t = 0; t < j; ++t) r *= (s - t);
    return r;
}

} // namespace nashcurve
