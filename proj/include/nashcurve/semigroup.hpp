#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nashcurve/errors.hpp"

namespace nashcurve {

/// A numerical semigroup: a cofinite additive submonoid of Z>=0, stored by
/// its minimal generators, its conductor c (least c with [c,oo) contained in
/// S; c = 0 for Z>=0) and a membership table below the conductor. Values are
/// immutable after construction, so instances are safe to share across
/// threads.
class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `generators`. The input need not be
    /// minimal; it is minimalized. Throws NotCofinite when gcd != 1 and
    /// DomainError on empty or nonpositive input.
    explicit NumericalSemigroup(std::vector<long long> generators) {
        if (generators.empty()) throw DomainError("semigroup needs at least one generator");
        long long g = 0;
        for (long long a : generators) {
            if (a <= 0) throw DomainError("semigroup generators must be positive");
            g = std::gcd(g, a);
        }
        if (g != 1) throw NotCofinite("gcd of generators is " + std::to_string(g));
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        build(generators);
    }

    static NumericalSemigroup trivial() { return NumericalSemigroup({1}); }

    const std::vector<long long>& minimal_generators() const { return gens_; }
    long long conductor() const { return conductor_; }
    bool is_trivial() const { return conductor_ == 0; }

    /// s_1, the least positive element (1 for Z>=0).
    long long multiplicity() const {
        if (conductor_ == 0) return 1;
        return below_.size() > 1 ? below_[1] : conductor_;
    }

    /// Number of gaps (positive integers outside S).
    long long genus() const { return conductor_ - static_cast<long long>(below_.size()); }

    bool contains(long long v) const {
        if (v < 0) return false;
        if (v >= conductor_) return true;
        return member_[static_cast<std::size_t>(v)] != 0;
    }

    /// s_i in the enumeration 0 = s_0 < s_1 < ... (this paper's indexing).
    long long element(std::size_t i) const {
        if (i < below_.size()) return below_[i];
        return conductor_ + static_cast<long long>(i - below_.size());
    }

    /// Inverse of element(); `s` must belong to S.
    std::size_t index_of(long long s) const {
        if (s >= conductor_) return below_.size() + static_cast<std::size_t>(s - conductor_);
        auto it = std::lower_bound(below_.begin(), below_.end(), s);
        if (it == below_.end() || *it != s)
            throw DomainError("index_of: " + std::to_string(s) + " is not an element");
        return static_cast<std::size_t>(it - below_.begin());
    }

    /// Elements strictly below the conductor (always starts with 0 unless
    /// the semigroup is trivial, in which case the list is empty).
    const std::vector<long long>& elements_below_conductor() const { return below_; }

    /// All elements <= bound, ascending.
    std::vector<long long> elements_up_to(long long bound) const {
        std::vector<long long> out;
        for (long long v : below_) {
            if (v > bound) return out;
            out.push_back(v);
        }
        for (long long v = conductor_; v <= bound; ++v) out.push_back(v);
        return out;
    }

    /// True when every element of `other` lies in this semigroup.
    bool contains_semigroup(const NumericalSemigroup& other) const {
        for (long long a : other.gens_)
            if (!contains(a)) return false;
        return true;
    }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ == b.gens_;
    }
    friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ < b.gens_;
    }

    /// Text form matching the paper: ⟨5,7⟩.
    std::string to_string() const {
        std::string out = "⟨";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(gens_[i]);
        }
        out += "⟩";
        return out;
    }

private:
    void build(const std::vector<long long>& raw) {
        // Sieve over [0, bound], doubling on demand; the conductor is the
        // start of the first run of s_1 consecutive members.
        const long long s1 = raw.front();
        long long bound = 2 * raw.back() + 4;
        for (;;) {
            std::vector<std::uint8_t> member(static_cast<std::size_t>(bound) + 1, 0);
            member[0] = 1;
            for (long long v = 1; v <= bound; ++v)
                for (long long a : raw) {
                    if (a > v) break;
                    if (member[static_cast<std::size_t>(v - a)]) {
                        member[static_cast<std::size_t>(v)] = 1;
                        break;
                    }
                }
            long long run = 0, cond = -1;
            for (long long v = 0; v <= bound; ++v) {
                if (member[static_cast<std::size_t>(v)]) {
                    if (++run >= s1) {
                        cond = v - run + 1;
                        break;
                    }
                } else {
                    run = 0;
                }
            }
            if (cond < 0) {
                bound *= 2;
                continue;
            }
            conductor_ = cond;
            member_.assign(member.begin(), member.begin() + cond);
            below_.clear();
            for (long long v = 0; v < cond; ++v)
                if (member[static_cast<std::size_t>(v)]) below_.push_back(v);
            break;
        }
        // Minimal generators: elements not a sum of two nonzero elements.
        // Any minimal generator is at most conductor + multiplicity - 1.
        gens_.clear();
        const long long top = conductor_ == 0 ? 1 : conductor_ + multiplicity() - 1;
        for (long long e = 1; e <= top; ++e) {
            if (!contains(e)) continue;
            bool decomposable = false;
            for (long long a : below_) {
                if (a == 0) continue;
                if (2 * a > e) break;
                if (contains(e - a)) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) gens_.push_back(e);
        }
    }

    std::vector<long long> gens_;
    long long conductor_ = 0;
    std::vector<long long> below_;
    std::vector<std::uint8_t> member_;
};

/// Semigroup generated by the union of elements of S and S'.
inline NumericalSemigroup join(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    std::vector<long long> gens = a.minimal_generators();
    const auto& gb = b.minimal_generators();
    gens.insert(gens.end(), gb.begin(), gb.end());
    return NumericalSemigroup(gens);
}

/// Blowup with respect to the reduced special point: the semigroup generated
/// by {e} and {s - e : s in S, e <= s <= e + c} with e the multiplicity.
/// Cross-checked on every call against the generator formula
/// ⟨e, a_2-e, ..., a_k-e⟩; the two must agree.
inline NumericalSemigroup point_blowup(const NumericalSemigroup& s) {
    if (s.is_trivial()) return s;
    const long long e = s.multiplicity();
    std::vector<long long> gens{e};
    for (long long v : s.elements_up_to(e + s.conductor()))
        if (v > e) gens.push_back(v - e);
    NumericalSemigroup by_elements(gens);

    std::vector<long long> ggens{e};
    for (long long a : s.minimal_generators())
        if (a != e) ggens.push_back(a - e);
    NumericalSemigroup by_generators(ggens);

    if (!(by_elements == by_generators))
        throw InternalCheckError("point_blowup: element and generator formulas disagree for " +
                                 s.to_string());
    return by_elements;
}

enum class BlowupMode { simple, flag };

/// Semigroup generated by the differences s_m - s_l with l <= n and m > n
/// (simple) or m > l (flag). The sweep over m stops once the current result
/// R satisfies s_m - s_n >= conductor(R) — every later difference then lies
/// in R — and a full confirming window of length conductor(R) + s_n past the
/// last change has been scanned. Intermediate generator sets may have
/// gcd > 1; the sweep keeps extending until they become cofinite (the full
/// difference set always contains S, so this terminates).
inline NumericalSemigroup difference_semigroup(const NumericalSemigroup& s, int n, BlowupMode mode) {
    if (n < 0) throw DomainError("difference_semigroup: n must be >= 0");
    const long long sn = s.element(static_cast<std::size_t>(n));
    std::vector<long long> gens;
    long long gcd_all = 0;
    std::optional<NumericalSemigroup> r;
    long long last_new = sn;
    for (std::size_t m = 1;; ++m) {
        const long long sm = s.element(m);
        if (r && sm - sn >= r->conductor() && sm > last_new + r->conductor() + sn) break;
        const std::size_t lmax = std::min<std::size_t>(static_cast<std::size_t>(n), m - 1);
        bool added = false;
        for (std::size_t l = 0; l <= lmax; ++l) {
            if (mode == BlowupMode::simple && m <= static_cast<std::size_t>(n)) continue;
            const long long d = sm - s.element(l);
            if (d <= 0) continue;
            if (r && r->contains(d)) continue;
            if (!r && std::find(gens.begin(), gens.end(), d) != gens.end()) continue;
            gens.push_back(d);
            gcd_all = std::gcd(gcd_all, d);
            added = true;
        }
        if (added) {
            last_new = sm;
            if (gcd_all == 1) r.emplace(gens);
        }
    }
    return *r;
}

} // namespace nashcurve
