#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nashcurve/enumerate.hpp"
#include "nashcurve/nash.hpp"
#include "nashcurve/semigroup.hpp"
#include "nashcurve/staircase.hpp"

namespace nashcurve {

struct SweepBounds {
    int max_mult = 8;
    long long max_cond = 30;
    int max_n = 6;
};

/// One cross-validation or comparison outcome, the unit of the JSON-lines
/// report. `expected`/`actual` are rendered values: "true"/"false" for
/// criteria, semigroup text for conjecture rows.
struct SweepRecord {
    NumericalSemigroup semigroup;
    int n = 0;
    std::string check;
    std::string expected;
    std::string actual;
    bool agree = false;
};

struct SweepSummary {
    long long semigroups = 0;
    long long records = 0;
    long long theorem_mismatches = 0;       // simple/flag criterion vs computed semigroup
    long long conductor_violations = 0;     // s_{n+1} > c without the simple criterion
    long long conjecture_disagreements = 0; // recorded, never a failure
};

/// Runs the criterion cross-validation, conductor implication and conjecture
/// comparison over every semigroup within bounds and every n <= max_n,
/// streaming one SweepRecord per check to `emit`. A theorem mismatch inside
/// the engine throws CriterionMismatch (the run must fail loudly); the
/// records produced here additionally re-derive each comparison so the
/// report is self-contained.
inline SweepSummary run_criterion_sweep(const SweepBounds& bounds,
                                        const std::function<void(const SweepRecord&)>& emit) {
    SweepSummary summary;
    const auto render_bool = [](bool b) { return b ? std::string("true") : std::string("false"); };
    for (const NumericalSemigroup& s : enumerate_semigroups(bounds.max_mult, bounds.max_cond)) {
        ++summary.semigroups;
        NashEngine engine(s);
        for (int n = 0; n <= bounds.max_n; ++n) {
            const bool crit_simple = is_normal_simple(s, n);
            const bool crit_flag = is_normal_flag(s, n);
            const NashResult simple = engine.simple(n);
            const NashResult flag = engine.flag(n);

            SweepRecord rec{s, n, "simple_criterion", render_bool(crit_simple),
                            render_bool(simple.output.is_trivial()),
                            crit_simple == simple.output.is_trivial()};
            if (!rec.agree) ++summary.theorem_mismatches;
            ++summary.records;
            if (emit) emit(rec);

            rec = {s, n, "flag_criterion", render_bool(crit_flag),
                   render_bool(flag.output.is_trivial()),
                   crit_flag == flag.output.is_trivial()};
            if (!rec.agree) ++summary.theorem_mismatches;
            ++summary.records;
            if (emit) emit(rec);

            if (s.element(static_cast<std::size_t>(n) + 1) > s.conductor()) {
                rec = {s, n, "conductor_implication", "true", render_bool(crit_simple), crit_simple};
                if (!rec.agree) ++summary.conductor_violations;
                ++summary.records;
                if (emit) emit(rec);
            }

            for (BlowupMode mode : {BlowupMode::simple, BlowupMode::flag}) {
                const NumericalSemigroup& computed =
                    mode == BlowupMode::simple ? simple.output : flag.output;
                const NumericalSemigroup conjectured = difference_semigroup(s, n, mode);
                rec = {s, n,
                       mode == BlowupMode::simple ? "conjecture_simple" : "conjecture_flag",
                       conjectured.to_string(), computed.to_string(), conjectured == computed};
                if (!rec.agree) ++summary.conjecture_disagreements;
                ++summary.records;
                if (emit) emit(rec);
            }
        }
    }
    return summary;
}

struct IdentitySweepSummary {
    long long semigroups = 0;
    long long pairs = 0;
    long long identities = 0;
    long long conductor_cases = 0;     // pairs x n with T_{n+1} not containing U
    long long conductor_violations = 0;
};

/// The Prop-3.1 identity suite over all unordered pairs of semigroups
/// within bounds and levels i <= max_level, via the shared grid kernel. Also
/// checks the conductor corollary on every pair for n <= max_n: whenever
/// T_{n+1} does not contain the conductor region U, both product criteria
/// must hold. Every `sample_stride`-th pair is additionally pushed through
/// the public staircase operations (product_cluster_identity and
/// not_contained on real Staircase values) to keep the kernel honest.
inline IdentitySweepSummary run_identity_sweep(int max_mult, long long max_cond, int max_level,
                                               int max_n, std::size_t sample_stride = 199) {
    IdentitySweepSummary summary;
    const std::vector<NumericalSemigroup> sgs = enumerate_semigroups(max_mult, max_cond);
    summary.semigroups = static_cast<long long>(sgs.size());
    const int depth = std::max(max_level + 1, 1);
    std::vector<detail::ClusterFactor> factors;
    factors.reserve(sgs.size());
    for (const auto& s : sgs) factors.emplace_back(s, depth);

    for (std::size_t a = 0; a < sgs.size(); ++a) {
        for (std::size_t b = a; b < sgs.size(); ++b) {
            ++summary.pairs;
            for (int i = 0; i <= max_level; ++i) {
                ++summary.identities;
                const detail::IdentityGrids grids = detail::identity_grids(factors[a], factors[b], i);
                if (!grids.equal)
                    throw IdentityViolation("identity sweep: expressions differ for " +
                                            sgs[a].to_string() + " x " + sgs[b].to_string() +
                                            " at level " + std::to_string(i));
            }
            for (int n = 0; n <= max_n; ++n) {
                // T_{n+1} contains U = up(c_1, c_2) iff the index sum of the
                // conductors reaches n+1; validated against the staircase
                // route on the sampled pairs.
                const long long idx_sum =
                    static_cast<long long>(sgs[a].index_of(sgs[a].conductor())) +
                    static_cast<long long>(sgs[b].index_of(sgs[b].conductor()));
                const bool t_misses_u = idx_sum < n + 1;
                if (t_misses_u) {
                    ++summary.conductor_cases;
                    if (!product_regular({sgs[a], sgs[b]}, n, BlowupMode::simple) ||
                        !product_regular({sgs[a], sgs[b]}, n, BlowupMode::flag))
                        ++summary.conductor_violations;
                }
            }
            if (summary.pairs % static_cast<long long>(sample_stride) == 1) {
                const FlagCluster u = flag_cluster(sgs[a], depth);
                const FlagCluster v = flag_cluster(sgs[b], depth);
                for (int i = 0; i <= max_level; ++i) {
                    const IdentityResult res = product_cluster_identity(u, v, i);
                    if (!res.verified)
                        throw IdentityViolation("sampled identity not verified");
                }
                for (int n = 0; n <= max_n; ++n) {
                    const Staircase t = Staircase::t_staircase({sgs[a], sgs[b]}, n);
                    const Staircase uc = Staircase::conductor_region({sgs[a], sgs[b]});
                    const long long idx_sum =
                        static_cast<long long>(sgs[a].index_of(sgs[a].conductor())) +
                        static_cast<long long>(sgs[b].index_of(sgs[b].conductor()));
                    if (not_contained(t, uc) != (idx_sum < n + 1))
                        throw InternalCheckError("fast conductor rule disagrees with staircases");
                }
            }
        }
    }
    return summary;
}

} // namespace nashcurve
