#pragma once

// Golden data transcribed from the source computations for the curve with
// value semigroup <5,7>, its first blowup <2,5>, and the blowup table.

#include <map>
#include <string>
#include <vector>

#include "nashcurve/bipoly.hpp"
#include "nashcurve/rational.hpp"

namespace testdata {

using nashcurve::BiPoly;
using nashcurve::Rational;

inline BiPoly from_terms(const std::vector<std::tuple<long long, long long, std::string>>& terms) {
    BiPoly p;
    for (const auto& [a, b, c] : terms) p.add_term(a, b, nashcurve::parse_rational(c));
    return p;
}

// h_1..h_6 for <5,7>
inline BiPoly h57(int m) {
    switch (m) {
        case 1:
            return from_terms({{5, 0, "1"}, {0, 5, "1"}});
        case 2:
            return from_terms({{7, 0, "1"}, {5, 2, "-7/5"}, {0, 7, "-2/5"}});
        case 3:
            return from_terms({{10, 0, "1"}, {7, 3, "25/7"}, {5, 5, "-3"}, {0, 10, "-3/7"}});
        case 4:
            return from_terms(
                {{12, 0, "1"}, {10, 2, "-14/5"}, {7, 5, "-4"}, {5, 7, "12/5"}, {0, 12, "1/5"}});
        case 5:
            return from_terms({{14, 0, "1"},
                               {12, 2, "-21/5"},
                               {10, 4, "147/25"},
                               {7, 7, "24/5"},
                               {5, 9, "-56/25"},
                               {0, 14, "-3/25"}});
        case 6:
            return from_terms({{15, 0, "1"},
                               {14, 1, "125/49"},
                               {12, 3, "-25/7"},
                               {10, 5, "3"},
                               {7, 8, "75/49"},
                               {5, 10, "-4/7"},
                               {0, 15, "-1/49"}});
        default:
            throw std::out_of_range("h57 defined for m = 1..6");
    }
}

// printed generators of I'^{(2)} for <2,5>
inline BiPoly h25_m2() {
    return from_terms({{4, 0, "1"}, {2, 2, "-2"}, {0, 4, "1"}});
}
inline BiPoly h25_second_generator() {
    return from_terms({{5, 0, "1"}, {2, 3, "5/2"}, {0, 5, "-3/2"}});
}

// I^{(4)} combination: h_6 - (125/49) y h_5 - (50/7) y^3 h_4
inline BiPoly i4_combination() {
    return from_terms(
        {{15, 0, "1"}, {10, 5, "8"}, {7, 8, "125/7"}, {5, 10, "-12"}, {0, 15, "-8/7"}});
}

// I^{(3)} generator: h_4 + (14/5) y^2 h_3
inline BiPoly i3_combination() {
    return from_terms({{12, 0, "1"}, {7, 5, "6"}, {5, 7, "-6"}, {0, 12, "-1"}});
}

// Blowup table of <5,7>: rows simple, flag, iterated classical, iterated
// point; columns n = 1..5.
inline std::vector<std::vector<std::vector<long long>>> table_5_7() {
    return {
        {{2, 5}, {3, 5, 7}, {2, 5}, {2, 3}, {1}}, // Nash_n
        {{2, 5}, {2, 3}, {2, 3}, {2, 3}, {1}},    // fNash_n
        {{2, 5}, {2, 3}, {1}, {1}, {1}},          // Nash^n
        {{2, 5}, {2, 3}, {1}, {1}, {1}},          // B^n
    };
}

} // namespace testdata
