#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nashcurve/errors.hpp"
#include "nashcurve/semigroup.hpp"

namespace nashcurve {

/// Enumerates every numerical semigroup with multiplicity <= max_mult and
/// conductor <= max_cond, each exactly once, by the gap-set tree: the parent
/// of S is S ∪ {F(S)}, children remove one minimal generator above the
/// current Frobenius number. Multiplicity never decreases down the tree, so
/// the multiplicity bound prunes whole branches. Deterministic DFS order.
inline std::vector<NumericalSemigroup> enumerate_semigroups(int max_mult, long long max_cond) {
    if (max_mult < 1 || max_cond < 0) throw DomainError("enumerate_semigroups: bad bounds");
    std::vector<NumericalSemigroup> out;
    const long long limit = max_cond + max_mult + 2;

    std::vector<std::uint8_t> member(static_cast<std::size_t>(limit) + 1, 1);
    std::function<void(long long)> visit = [&](long long frobenius) {
        const long long cond = frobenius + 1;
        long long mult = 1;
        while (!member[static_cast<std::size_t>(mult)]) ++mult;

        // minimal generators: members not a sum of two smaller members
        std::vector<long long> gens;
        for (long long e = 1; e <= limit; ++e) {
            if (!member[static_cast<std::size_t>(e)]) continue;
            bool decomposable = false;
            for (long long a = mult; 2 * a <= e; ++a)
                if (member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(e - a)]) {
                    decomposable = true;
                    break;
                }
            if (!decomposable) gens.push_back(e);
            if (e > cond + mult) break; // no minimal generator beyond c + s_1 - 1
        }

        if (cond <= max_cond && mult <= max_mult) out.emplace_back(gens);

        for (long long e : gens) {
            if (e <= frobenius || e > max_cond - 1) continue;
            // removing the multiplicity raises it; prune when that escapes
            if (e == mult) {
                long long next = mult + 1;
                while (!member[static_cast<std::size_t>(next)] || next == e) ++next;
                if (next > max_mult) continue;
            }
            member[static_cast<std::size_t>(e)] = 0;
            visit(e);
            member[static_cast<std::size_t>(e)] = 1;
        }
    };
    visit(-1);
    return out;
}

} // namespace nashcurve
