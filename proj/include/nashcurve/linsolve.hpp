#pragma once

#include <cstddef>
#include <vector>

#include "nashcurve/errors.hpp"
#include "nashcurve/rational.hpp"

namespace nashcurve {

// Solves the homogeneous system given by an m x (m+1) matrix with the
// unknown at `normalization` pinned to 1, by exact fraction-full Gaussian
// elimination. Pivoting takes the first nonzero entry; in exact arithmetic
// any nonzero pivot is correct and this keeps the elimination deterministic.
// Throws SingularSystem when the m x m minor excluding the normalization
// column is singular.
inline std::vector<Rational> solve_unique(const std::vector<std::vector<Rational>>& matrix,
                                          std::size_t normalization) {
    const std::size_t m = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != m + 1)
            throw DomainError("solve_unique: matrix must be m x (m+1)");
    if (normalization > m)
        throw DomainError("solve_unique: normalization index out of range");

    // A x = -column(normalization), A the square minor on the other columns.
    std::vector<std::size_t> cols;
    cols.reserve(m);
    for (std::size_t c = 0; c <= m; ++c)
        if (c != normalization) cols.push_back(c);

    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) a[r][c] = matrix[r][cols[c]];
        a[r][m] = -matrix[r][normalization];
    }

    for (std::size_t c = 0; c < m; ++c) {
        std::size_t pivot = c;
        while (pivot < m && a[pivot][c] == 0) ++pivot;
        if (pivot == m)
            throw SingularSystem("solve_unique: singular minor at column " + std::to_string(c));
        if (pivot != c) std::swap(a[pivot], a[c]);
        for (std::size_t r = c + 1; r < m; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
        }
    }

    std::vector<Rational> x(m);
    for (std::size_t ri = m; ri-- > 0;) {
        Rational v = a[ri][m];
        for (std::size_t k = ri + 1; k < m; ++k) v -= a[ri][k] * x[k];
        x[ri] = v / a[ri][ri];
    }

    std::vector<Rational> solution(m + 1);
    solution[normalization] = 1;
    for (std::size_t c = 0; c < m; ++c) solution[cols[c]] = x[c];

    // Exact residual check: every constraint row must vanish.
    for (std::size_t r = 0; r < m; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c <= m; ++c) acc += matrix[r][c] * solution[c];
        if (acc != 0)
            throw InternalCheckError("solve_unique: nonzero residual");
    }
    return solution;
}

} // namespace nashcurve
