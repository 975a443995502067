#pragma once

#include <map>
#include <string>
#include <vector>

#include "nashcurve/errors.hpp"
#include "nashcurve/hpoly.hpp"
#include "nashcurve/rational.hpp"
#include "nashcurve/semigroup.hpp"

namespace nashcurve {

enum class NashKind { simple, flag, iterated_classical, iterated_point };

inline std::string kind_name(NashKind k) {
    switch (k) {
        case NashKind::simple: return "simple";
        case NashKind::flag: return "flag";
        case NashKind::iterated_classical: return "iterated_classical";
        case NashKind::iterated_point: return "iterated_point";
    }
    return "?";
}

/// One rewrite outcome: x^s reduced to lambda * y^{s - s_i} * x^{s_i}.
struct ProvenanceRecord {
    long long s = 0;          // element reduced
    int i = 0;                // fiber basis index
    long long exponent = 0;   // s - s_i
    Rational coefficient;     // lambda, nonzero
};

/// Value semigroup of a higher Nash blowup of a monomial curve, with the
/// rewrite provenance that produced its generators.
struct NashResult {
    NumericalSemigroup input;
    int level = 0;
    NashKind kind = NashKind::simple;
    NumericalSemigroup output;
    std::vector<ProvenanceRecord> provenance;

    NashResult(NumericalSemigroup in, int n, NashKind k, NumericalSemigroup out)
        : input(std::move(in)), level(n), kind(k), output(std::move(out)) {}
};

/// Theorem-level normality criterion for the simple n-th Nash blowup:
/// normal iff s_{n+1} - 1 lies in S.
inline bool is_normal_simple(const NumericalSemigroup& s, int n) {
    if (n < 0) throw DomainError("is_normal_simple: n must be >= 0");
    return s.contains(s.element(static_cast<std::size_t>(n) + 1) - 1);
}

/// Flag criterion: normal iff s_m - 1 lies in S for some 1 <= m <= n+1.
inline bool is_normal_flag(const NumericalSemigroup& s, int n) {
    if (n < 0) throw DomainError("is_normal_flag: n must be >= 0");
    for (std::size_t m = 1; m <= static_cast<std::size_t>(n) + 1; ++m)
        if (s.contains(s.element(m) - 1)) return true;
    return false;
}

/// Computes Nash blowup value semigroups of one monomial curve. Holds the
/// per-curve h-coefficient cache and per-level normal-form tables, so
/// computing all levels of one curve shares every expensive piece. Each
/// engine instance is independent; use one per thread.
class NashEngine {
public:
    explicit NashEngine(NumericalSemigroup s) : s_(std::move(s)), basis_(s_) {}

    const NumericalSemigroup& curve() const { return s_; }

    /// Normal form of x^{s_m} modulo {h_j : j >= n+1} over the generic
    /// fiber: coefficients lambda_i with
    /// x^{s_m} == sum_i lambda_i y^{s_m - s_i} x^{s_i}, i <= n. By
    /// homogeneity the y-exponent is determined, so only (i, lambda) pairs
    /// are kept; entry i of the returned vector is lambda_i.
    const std::vector<Rational>& normal_form_row(int n, int m) {
        auto& table = nf_[n];
        const std::size_t want = static_cast<std::size_t>(m);
        if (table.size() <= want) table.resize(want + 1);
        if (!table[want].empty()) return table[want];
        for (int j = n + 1; j <= m; ++j) {
            auto& row = table[static_cast<std::size_t>(j)];
            if (!row.empty()) continue;
            const std::vector<Rational>& c = basis_.coefficients(j);
            row.assign(static_cast<std::size_t>(n) + 1, Rational(0));
            for (int i = 0; i <= n; ++i) row[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
            for (int t = n + 1; t < j; ++t) {
                const Rational& ct = c[static_cast<std::size_t>(t)];
                if (ct == 0) continue;
                const auto& prev = table[static_cast<std::size_t>(t)];
                for (int i = 0; i <= n; ++i)
                    row[static_cast<std::size_t>(i)] -= ct * prev[static_cast<std::size_t>(i)];
            }
        }
        return table[want];
    }

    std::map<int, Rational> reduce(int n, long long sval) {
        if (n < 0) throw DomainError("reduce_modulo: n must be >= 0");
        if (!s_.contains(sval)) throw DomainError("reduce_modulo: s must be an element of S");
        const std::size_t m = s_.index_of(sval);
        if (m < static_cast<std::size_t>(n) + 1)
            throw DomainError("reduce_modulo: s must be s_m with m >= n+1");
        const auto& row = normal_form_row(n, static_cast<int>(m));
        std::map<int, Rational> out;
        for (int i = 0; i <= n; ++i)
            if (row[static_cast<std::size_t>(i)] != 0) out.emplace(i, row[static_cast<std::size_t>(i)]);
        return out;
    }

    /// Simple n-th Nash blowup semigroup. Sweeps x^{s_m} for m >= n+1,
    /// collecting differences s_m - s_i with nonzero normal-form
    /// coefficient; stops once s_m - s_n >= conductor(R) for the current
    /// output R and a confirming window of length conductor(R) + s_n past
    /// the last change stayed silent. `extension` reduces that many extra
    /// elements past the stop point (used by the generator-independence
    /// property test).
    NashResult simple(int n, int extension = 0) {
        if (n < 0) throw DomainError("nash_semigroup: n must be >= 0");
        if (extension == 0) {
            auto it = simple_cache_.find(n);
            if (it != simple_cache_.end()) return it->second;
        }
        const long long sn = s_.element(static_cast<std::size_t>(n));
        std::vector<long long> gens = s_.minimal_generators();
        NumericalSemigroup r = s_;
        NashResult result(s_, n, NashKind::simple, r);
        long long last_new = sn;
        int extra = extension;
        for (std::size_t m = static_cast<std::size_t>(n) + 1;; ++m) {
            const long long sm = s_.element(m);
            if (sm - sn >= r.conductor() && sm > last_new + r.conductor() + sn) {
                if (extra == 0) break;
                --extra;
            }
            const auto& row = normal_form_row(n, static_cast<int>(m));
            bool grew = false;
            for (int i = 0; i <= n; ++i) {
                const Rational& lambda = row[static_cast<std::size_t>(i)];
                if (lambda == 0) continue;
                const long long d = sm - s_.element(static_cast<std::size_t>(i));
                result.provenance.push_back({sm, i, d, lambda});
                if (!r.contains(d)) {
                    gens.push_back(d);
                    grew = true;
                }
            }
            if (grew) {
                r = NumericalSemigroup(gens);
                last_new = sm;
            }
        }
        result.output = r;
        check_result(result, is_normal_simple(s_, n));
        if (extension == 0) simple_cache_.emplace(n, result);
        return result;
    }

    /// Flag n-th Nash blowup semigroup: the join of the simple blowups of
    /// every level m <= n.
    NashResult flag(int n) {
        if (n < 0) throw DomainError("flag_nash_semigroup: n must be >= 0");
        NumericalSemigroup out = s_;
        NashResult result(s_, n, NashKind::flag, out);
        for (int m = 0; m <= n; ++m) {
            NashResult step = simple(m);
            out = join(out, step.output);
            result.provenance.insert(result.provenance.end(), step.provenance.begin(),
                                     step.provenance.end());
        }
        result.output = out;
        check_result(result, is_normal_flag(s_, n));
        return result;
    }

    NashResult blowup(int n, NashKind kind) {
        switch (kind) {
            case NashKind::simple: return simple(n);
            case NashKind::flag: return flag(n);
            case NashKind::iterated_classical:
            case NashKind::iterated_point: break;
        }
        if (n < 1) throw DomainError("iterated blowups need n >= 1");
        NumericalSemigroup cur = s_;
        for (int step = 0; step < n; ++step) {
            if (kind == NashKind::iterated_classical) {
                NashEngine stage(cur);
                cur = stage.simple(1).output;
            } else {
                cur = point_blowup(cur);
            }
        }
        NashResult result(s_, n, kind, cur);
        if (!result.output.contains_semigroup(s_))
            throw InternalCheckError("iterated blowup output does not contain the input semigroup");
        return result;
    }

private:
    void check_result(const NashResult& result, bool criterion) const {
        if (!result.output.contains_semigroup(result.input))
            throw InternalCheckError("nash output does not contain the input semigroup for " +
                                     result.input.to_string());
        if (result.output.is_trivial() != criterion)
            throw CriterionMismatch("computed semigroup and normality criterion disagree for " +
                                    result.input.to_string() + ", kind " + kind_name(result.kind) +
                                    ", n=" + std::to_string(result.level));
    }

    NumericalSemigroup s_;
    HBasis basis_;
    std::map<int, std::vector<std::vector<Rational>>> nf_; // n -> [m] -> lambda_0..lambda_n
    std::map<int, NashResult> simple_cache_;
};

/// Normal form of x^s over the fiber basis {x^{s_0},...,x^{s_n}}; the map
/// sends basis index i to the coefficient of y^{s-s_i} x^{s_i}.
inline std::map<int, Rational> reduce_modulo(const NumericalSemigroup& s, int n, long long sval) {
    NashEngine engine(s);
    return engine.reduce(n, sval);
}

inline NashResult nash_semigroup(const NumericalSemigroup& s, int n) {
    return NashEngine(s).simple(n);
}

inline NashResult flag_nash_semigroup(const NumericalSemigroup& s, int n) {
    return NashEngine(s).flag(n);
}

inline NashResult iterated_classical(const NumericalSemigroup& s, int n) {
    return NashEngine(s).blowup(n, NashKind::iterated_classical);
}

inline NashResult iterated_point(const NumericalSemigroup& s, int n) {
    return NashEngine(s).blowup(n, NashKind::iterated_point);
}

/// One conjecture comparison: computed blowup semigroup vs the difference
/// semigroup the closing conjecture predicts. Never asserted, only reported.
struct ConjectureRow {
    int n = 0;
    BlowupMode mode = BlowupMode::simple;
    NumericalSemigroup computed;
    NumericalSemigroup conjectured;
    bool agree = false;
};

inline std::vector<ConjectureRow> conjecture_report(const NumericalSemigroup& s, int n_max) {
    if (n_max < 0) throw DomainError("conjecture_report: n_max must be >= 0");
    NashEngine engine(s);
    std::vector<ConjectureRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        for (BlowupMode mode : {BlowupMode::simple, BlowupMode::flag}) {
            NumericalSemigroup computed =
                mode == BlowupMode::simple ? engine.simple(n).output : engine.flag(n).output;
            NumericalSemigroup conjectured = difference_semigroup(s, n, mode);
            const bool agree = computed == conjectured;
            rows.push_back({n, mode, std::move(computed), std::move(conjectured), agree});
        }
    }
    return rows;
}

} // namespace nashcurve
