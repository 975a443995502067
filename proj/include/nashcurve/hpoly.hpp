#pragma once

#include <vector>

#include "nashcurve/bipoly.hpp"
#include "nashcurve/errors.hpp"
#include "nashcurve/rational.hpp"
#include "nashcurve/semigroup.hpp"

namespace nashcurve {

/// The canonical homogeneous generator h_m of the graph-ideal symbolic
/// power: the unique polynomial of degree s_m supported on x-exponents
/// {s_0,...,s_m}, monic in x^{s_m}, divisible by (x+y)^m.
struct HPolynomial {
    int m = 0;
    long long degree = 0;               // s_m
    BiPoly poly;                        // homogeneous of degree s_m
    std::vector<long long> support;     // x exponents s_0..s_m
};

/// Coefficients c_0..c_m of h_m on the monomials x^{s_k} y^{s_m - s_k},
/// c_m = 1. The defining linear system (vanishing of the first m derivatives
/// of the dehomogenization at t = -1) is a confluent Vandermonde system; its
/// null vector has the closed form
///   c_k = (-1)^{(m-k)+(s_m-s_k)} *
///         prod_{u<m, u!=k}(s_m-s_u) / (prod_{u<k}(s_k-s_u) * prod_{k<v<m}(s_v-s_k)).
/// The full m x (m+1) system residual is verified exactly on every call, so
/// the returned vector is the machine-checked unique solution.
inline std::vector<Rational> h_coefficients(const NumericalSemigroup& s, int m) {
    if (m < 1) throw DomainError("h_coefficients: m must be >= 1");
    const std::size_t mm = static_cast<std::size_t>(m);
    std::vector<long long> e(mm + 1);
    for (std::size_t i = 0; i <= mm; ++i) e[i] = s.element(i);

    std::vector<Rational> c(mm + 1);
    c[mm] = 1;
    for (std::size_t k = 0; k < mm; ++k) {
        Int num = 1, den = 1;
        for (std::size_t u = 0; u < mm; ++u)
            if (u != k) num *= (e[mm] - e[u]);
        for (std::size_t u = 0; u < k; ++u) den *= (e[k] - e[u]);
        for (std::size_t v = k + 1; v < mm; ++v) den *= (e[v] - e[k]);
        if (((static_cast<long long>(mm - k) + (e[mm] - e[k])) % 2) != 0) num = -num;
        c[k] = Rational(num, den);
    }

    // Residual of every constraint row: sum_k c_k (s_k)_j (-1)^{s_k - j} = 0.
    for (long long j = 0; j < m; ++j) {
        Rational acc = 0;
        for (std::size_t k = 0; k <= mm; ++k) {
            Int f = falling_factorial(e[k], j);
            if (f == 0) continue;
            if ((e[k] - j) % 2 != 0) f = -f;
            acc += c[k] * Rational(f);
        }
        if (acc != 0)
            throw ConstructionFailed("h_coefficients: residual nonzero for " + s.to_string() +
                                     ", m=" + std::to_string(m));
    }
    return c;
}

/// Constructs h_m for the monomial curve of S and checks every invariant:
/// homogeneous of degree s_m, monic top term, support inside S,
/// y-slice 0 equal to x^{s_m}, divisibility order >= m.
inline HPolynomial construct_h(const NumericalSemigroup& s, int m) {
    const std::vector<Rational> c = h_coefficients(s, m);
    HPolynomial h;
    h.m = m;
    h.degree = s.element(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < c.size(); ++k) {
        const long long sk = s.element(k);
        h.poly.add_term(sk, h.degree - sk, c[k]);
        h.support.push_back(sk);
    }
    if (h.poly.coefficient(h.degree, 0) != 1)
        throw ConstructionFailed("construct_h: top term not monic");
    if (y_slice(h.poly, 0) != UniPoly{{h.degree, Rational(1)}})
        throw ConstructionFailed("construct_h: y-slice 0 is not x^{s_m}");
    for (long long a : h.support)
        if (!s.contains(a))
            throw ConstructionFailed("construct_h: support escapes the semigroup");
    if (divisibility_order(h.poly) < m)
        throw ConstructionFailed("construct_h: (x+y)-order below m");
    return h;
}

/// Condition (4) of the h_m construction: the y^1 slice is nonzero exactly
/// when s_m - 1 lies in S, and is then the single monomial in x^{s_m - 1}.
/// Returns whether the slice is nonzero; a disagreement with the membership
/// test would falsify the construction and aborts.
inline bool h_slice_order_test(const HPolynomial& h, const NumericalSemigroup& s) {
    const UniPoly slice = y_slice(h.poly, 1);
    const bool nonzero = !slice.empty();
    if (nonzero != s.contains(h.degree - 1))
        throw CriterionMismatch("h_slice_order_test: slice/membership disagree for " +
                                s.to_string() + ", m=" + std::to_string(h.m));
    if (nonzero && (slice.size() != 1 || slice.begin()->first != h.degree - 1))
        throw CriterionMismatch("h_slice_order_test: slice is not a single monomial in x^{s_m-1}");
    return nonzero;
}

/// Generating set {h_m : n+1 <= m <= M} of the symbolic power I^{(n+1)},
/// with M minimal such that s_M >= s_{n+1} + conductor(S).
struct SymbolicPowerBasis {
    int n = 0;
    std::vector<HPolynomial> members;
    int bound = 0;                      // M
};

inline SymbolicPowerBasis symbolic_power_basis(const NumericalSemigroup& s, int n) {
    if (n < 0) throw DomainError("symbolic_power_basis: n must be >= 0");
    SymbolicPowerBasis basis;
    basis.n = n;
    const long long target = s.element(static_cast<std::size_t>(n) + 1) + s.conductor();
    int m = n + 1;
    for (;; ++m) {
        basis.members.push_back(construct_h(s, m));
        if (s.element(static_cast<std::size_t>(m)) >= target) break;
    }
    basis.bound = m;
    return basis;
}

/// Per-curve cache of h_m coefficient vectors, grown on demand. The nash
/// engine asks for arbitrarily large m while sweeping; coefficients are the
/// only part it needs.
class HBasis {
public:
    explicit HBasis(const NumericalSemigroup& s) : s_(&s) {}

    const std::vector<Rational>& coefficients(int m) {
        const std::size_t idx = static_cast<std::size_t>(m);
        if (coeffs_.size() <= idx) coeffs_.resize(idx + 1);
        if (coeffs_[idx].empty()) coeffs_[idx] = h_coefficients(*s_, m);
        return coeffs_[idx];
    }

private:
    const NumericalSemigroup* s_;
    std::vector<std::vector<Rational>> coeffs_; // [m] -> c_0..c_m
};

} // namespace nashcurve
