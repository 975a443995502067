#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashcurve/errors.hpp"
#include "nashcurve/rational.hpp"

namespace nashcurve {

// Univariate polynomial in x as a sparse exponent -> coefficient map.
// Zero coefficients are never stored.
using UniPoly = std::map<long long, Rational>;

/// Sparse bivariate polynomial over Q, keyed by (x exponent, y exponent).
/// Canonical form: no zero-coefficient entries; equality is term-map
/// equality.
class BiPoly {
public:
    using Key = std::pair<long long, long long>;
    using TermMap = std::map<Key, Rational>;

    BiPoly() = default;

    static BiPoly monomial(long long xe, long long ye, Rational coeff) {
        BiPoly p;
        p.add_term(xe, ye, coeff);
        return p;
    }

    static BiPoly constant(Rational c) { return monomial(0, 0, std::move(c)); }

    void add_term(long long xe, long long ye, const Rational& coeff) {
        if (coeff == 0) return;
        const Key key{xe, ye};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(long long xe, long long ye) const {
        auto it = terms_.find({xe, ye});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_homogeneous() const {
        std::optional<long long> deg;
        for (const auto& [key, c] : terms_) {
            const long long d = key.first + key.second;
            if (!deg) deg = d;
            else if (*deg != d) return false;
        }
        return true;
    }

    // Degree of a homogeneous polynomial; throws on zero or mixed degrees.
    long long homogeneous_degree() const {
        if (terms_.empty()) throw ZeroPolynomial("homogeneous_degree of 0");
        if (!is_homogeneous()) throw NonHomogeneous("polynomial is not homogeneous");
        const auto& key = terms_.begin()->first;
        return key.first + key.second;
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    friend BiPoly operator+(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [key, c] : q.terms_) r.add_term(key.first, key.second, c);
        return r;
    }

    friend BiPoly operator-(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [key, c] : q.terms_) r.add_term(key.first, key.second, -c);
        return r;
    }

    friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
        BiPoly r;
        for (const auto& [kp, cp] : p.terms_)
            for (const auto& [kq, cq] : q.terms_)
                r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
        return r;
    }

    friend BiPoly operator*(const Rational& c, const BiPoly& p) {
        BiPoly r;
        for (const auto& [key, pc] : p.terms_) r.add_term(key.first, key.second, c * pc);
        return r;
    }

private:
    TermMap terms_;
};

inline BiPoly poly_add(const BiPoly& p, const BiPoly& q) { return p + q; }
inline BiPoly poly_mul(const BiPoly& p, const BiPoly& q) { return p * q; }

// Coefficient of y^j, as a univariate polynomial in x.
inline UniPoly y_slice(const BiPoly& p, long long j) {
    UniPoly out;
    for (const auto& [key, c] : p.terms())
        if (key.second == j) out.emplace(key.first, c);
    return out;
}

// Largest m with (x+y)^m dividing p, for homogeneous p != 0. Decided on the
// dehomogenization q(t) = p(t,1): m is the number of successive derivatives
// of q vanishing at t = -1.
inline long long divisibility_order(const BiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("divisibility_order of the zero polynomial");
    if (!p.is_homogeneous()) throw NonHomogeneous("divisibility_order needs a homogeneous polynomial");
    const long long deg = p.homogeneous_degree();
    for (long long j = 0; j <= deg; ++j) {
        Rational value = 0;
        for (const auto& [key, c] : p.terms()) {
            const long long a = key.first;
            Int f = falling_factorial(a, j);
            if (f == 0) continue;
            if ((a - j) % 2 != 0) f = -f;
            value += c * Rational(f);
        }
        if (value != 0) return j;
    }
    throw InternalCheckError("divisibility_order: nonzero polynomial with no nonzero derivative");
}

namespace detail {

inline std::string render_magnitude(const Rational& mag) {
    const std::string s = rational_to_string(mag);
    return boost::multiprecision::denominator(mag) == 1 ? s : "(" + s + ")";
}

inline std::string render_term(const Rational& mag, long long xe, long long ye) {
    std::string out;
    const bool has_vars = xe > 0 || ye > 0;
    if (!has_vars || mag != 1) out = render_magnitude(mag);
    auto append_var = [&out](char v, long long e) {
        if (e <= 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    };
    append_var('x', xe);
    append_var('y', ye);
    return out;
}

} // namespace detail

// Renders in the paper's term order: decreasing x exponent.
// e.g. "x^7 - (7/5)*x^5*y^2 - (2/5)*y^7"
inline std::string render(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<BiPoly::Key, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::string out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& [key, c] = terms[t];
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (t == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += detail::render_term(mag, key.first, key.second);
    }
    return out;
}

} // namespace nashcurve
