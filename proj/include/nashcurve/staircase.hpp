#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nashcurve/errors.hpp"
#include "nashcurve/semigroup.hpp"

namespace nashcurve {

/// Up-closed subset of a product S_1 x ... x S_l of numerical semigroups,
/// the combinatorial shadow of a monomial ideal. Stored as the canonical
/// minimal generating antichain plus a membership grid over a box large
/// enough that membership anywhere follows by clamping large coordinates.
/// The complement need not be finite (the conductor region U is not for
/// l >= 2); colength() and complement() require cofiniteness and throw
/// NotCofinite otherwise.
class Staircase {
public:
    static Staircase from_generators(std::vector<NumericalSemigroup> ambient,
                                     std::vector<std::vector<long long>> generators) {
        Staircase st;
        st.ambient_ = std::move(ambient);
        st.init_from_generators(generators);
        return st;
    }

    /// The whole product, generated by the origin.
    static Staircase full(std::vector<NumericalSemigroup> ambient) {
        const std::size_t l = ambient.size();
        return from_generators(std::move(ambient), {std::vector<long long>(l, 0)});
    }

    /// T_{n+1}: up-closure of the value tuples (s_{1,m_1},...,s_{l,m_l})
    /// with sum m_i >= n+1. A tuple belongs exactly when its index sum is
    /// at least n+1.
    static Staircase t_staircase(std::vector<NumericalSemigroup> ambient, int n) {
        if (ambient.empty()) throw DomainError("t_staircase: need at least one factor");
        if (n < 0) throw DomainError("t_staircase: n must be >= 0");
        Staircase st;
        st.ambient_ = std::move(ambient);
        const std::size_t l = st.ambient_.size();
        std::vector<long long> thresholds(l), boxes(l);
        for (std::size_t k = 0; k < l; ++k) {
            const auto& s = st.ambient_[k];
            thresholds[k] = s.element(static_cast<std::size_t>(n) + 1) + s.conductor();
            boxes[k] = s.element(static_cast<std::size_t>(n) + 1) + 2 * s.conductor() + 4;
        }
        st.init_grid(boxes, thresholds);
        // membership: sum of element indices >= n+1
        std::vector<std::size_t> pos(l, 0);
        for (;;) {
            long long idx_sum = 0;
            for (std::size_t k = 0; k < l; ++k) idx_sum += static_cast<long long>(pos[k]);
            if (idx_sum >= n + 1) st.grid_[st.cell(pos)] = 1;
            if (!st.advance(pos)) break;
        }
        st.finish_from_grid("t_staircase");
        return st;
    }

    /// The conductor region U, generated by (c_1,...,c_l). Not cofinite for
    /// l >= 2 unless every factor is trivial.
    static Staircase conductor_region(std::vector<NumericalSemigroup> ambient) {
        if (ambient.empty()) throw DomainError("conductor_region: need at least one factor");
        std::vector<long long> gen;
        gen.reserve(ambient.size());
        for (const auto& s : ambient) gen.push_back(s.conductor());
        return from_generators(std::move(ambient), {gen});
    }

    std::size_t factors() const { return ambient_.size(); }
    const std::vector<NumericalSemigroup>& ambient() const { return ambient_; }
    bool is_cofinite() const { return cofinite_; }

    /// The unique minimal generating antichain, sorted.
    const std::vector<std::vector<long long>>& minimal_elements() const { return minimal_; }

    /// Membership of an arbitrary tuple; false when some coordinate is not
    /// an element of its factor.
    bool contains(const std::vector<long long>& point) const {
        if (point.size() != ambient_.size())
            throw DomainError("staircase contains: wrong tuple length");
        std::vector<std::size_t> pos(point.size());
        for (std::size_t k = 0; k < point.size(); ++k) {
            if (point[k] < 0 || !ambient_[k].contains(point[k])) return false;
            pos[k] = point[k] > box_[k] ? clamp_pos_[k] : ambient_[k].index_of(point[k]);
        }
        return grid_[cell(pos)] != 0;
    }

    long long colength() const {
        require_cofinite("colength");
        long long count = 0;
        for (std::uint8_t v : grid_)
            if (!v) ++count;
        return count;
    }

    std::vector<std::vector<long long>> complement() const {
        require_cofinite("complement");
        std::vector<std::vector<long long>> out;
        std::vector<std::size_t> pos(ambient_.size(), 0);
        for (;;) {
            if (!grid_[cell(pos)]) {
                std::vector<long long> p(ambient_.size());
                for (std::size_t k = 0; k < p.size(); ++k) p[k] = ambient_[k].element(pos[k]);
                out.push_back(std::move(p));
            }
            if (!advance(pos)) break;
        }
        return out;
    }

    friend bool operator==(const Staircase& a, const Staircase& b) {
        if (a.ambient_.size() != b.ambient_.size()) return false;
        for (std::size_t k = 0; k < a.ambient_.size(); ++k)
            if (!(a.ambient_[k] == b.ambient_[k])) return false;
        return a.minimal_ == b.minimal_;
    }

    friend Staircase staircase_sum(const Staircase& a, const Staircase& b);
    friend Staircase staircase_intersection(const Staircase& a, const Staircase& b);
    friend Staircase staircase_product(const Staircase& a, const Staircase& b);

private:
    Staircase() = default;

    void require_cofinite(const char* op) const {
        if (!cofinite_)
            throw NotCofinite(std::string(op) + ": staircase complement is infinite");
    }

    // Axis k holds the enumeration of S_k up to box_[k]; a grid position is
    // therefore an element index.
    void init_grid(const std::vector<long long>& boxes, const std::vector<long long>& thresholds) {
        const std::size_t l = ambient_.size();
        box_ = boxes;
        threshold_ = thresholds;
        axis_.resize(l);
        clamp_pos_.resize(l);
        std::size_t cells = 1;
        stride_.assign(l, 0);
        for (std::size_t k = 0; k < l; ++k) {
            axis_[k] = ambient_[k].elements_up_to(box_[k]);
            // first element >= threshold (exists: everything from the
            // conductor on is an element and threshold + 2 <= box)
            std::size_t cp = 0;
            while (axis_[k][cp] < threshold_[k]) ++cp;
            clamp_pos_[k] = cp;
        }
        for (std::size_t k = l; k-- > 0;) {
            stride_[k] = cells;
            cells *= axis_[k].size();
        }
        grid_.assign(cells, 0);
    }

    std::size_t cell(const std::vector<std::size_t>& pos) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < pos.size(); ++k) c += pos[k] * stride_[k];
        return c;
    }

    bool advance(std::vector<std::size_t>& pos) const {
        for (std::size_t k = pos.size(); k-- > 0;) {
            if (++pos[k] < axis_[k].size()) return true;
            pos[k] = 0;
        }
        return false;
    }

    void init_from_generators(const std::vector<std::vector<long long>>& generators) {
        const std::size_t l = ambient_.size();
        if (l == 0) throw DomainError("staircase needs at least one factor");
        if (generators.empty()) throw DomainError("staircase needs at least one generator");
        for (const auto& g : generators) {
            if (g.size() != l) throw DomainError("staircase generator has wrong length");
            for (std::size_t k = 0; k < l; ++k)
                if (g[k] < 0 || !ambient_[k].contains(g[k]))
                    throw DomainError("staircase generator coordinate outside its factor");
        }
        std::vector<long long> thresholds(l), boxes(l);
        for (std::size_t k = 0; k < l; ++k) {
            long long gmax = 0;
            for (const auto& g : generators) gmax = std::max(gmax, g[k]);
            thresholds[k] = gmax + ambient_[k].conductor();
            boxes[k] = thresholds[k] + 2;
        }
        init_grid(boxes, thresholds);
        // mark the principal up-set of each generator
        for (const auto& g : generators) {
            std::vector<std::vector<std::uint8_t>> up(l);
            for (std::size_t k = 0; k < l; ++k) {
                up[k].resize(axis_[k].size());
                for (std::size_t q = 0; q < axis_[k].size(); ++q)
                    up[k][q] = ambient_[k].contains(axis_[k][q] - g[k]) ? 1 : 0;
            }
            std::vector<std::size_t> pos(l, 0);
            for (;;) {
                bool in = true;
                for (std::size_t k = 0; k < l && in; ++k) in = up[k][pos[k]] != 0;
                if (in) grid_[cell(pos)] = 1;
                if (!advance(pos)) break;
            }
        }
        finish_from_grid("staircase");
    }

    // Cofiniteness and the canonical antichain, read off the grid.
    void finish_from_grid(const char*) {
        const std::size_t l = ambient_.size();
        cofinite_ = true;
        std::vector<std::size_t> pos(l, 0);
        for (;;) {
            const bool member = grid_[cell(pos)] != 0;
            if (!member) {
                for (std::size_t k = 0; k < l; ++k)
                    if (axis_[k][pos[k]] >= threshold_[k]) {
                        cofinite_ = false;
                        break;
                    }
            }
            if (!advance(pos)) break;
        }
        minimal_.clear();
        pos.assign(l, 0);
        for (;;) {
            if (grid_[cell(pos)] && is_minimal_cell(pos)) {
                std::vector<long long> p(l);
                for (std::size_t k = 0; k < l; ++k) p[k] = axis_[k][pos[k]];
                minimal_.push_back(std::move(p));
            }
            if (!advance(pos)) break;
        }
        std::sort(minimal_.begin(), minimal_.end());
    }

    // One-step descent suffices: the set is up-closed, so any dominated
    // member yields a member one minimal-generator step down.
    bool is_minimal_cell(const std::vector<std::size_t>& pos) const {
        for (std::size_t k = 0; k < ambient_.size(); ++k) {
            const long long v = axis_[k][pos[k]];
            for (long long a : ambient_[k].minimal_generators()) {
                const long long w = v - a;
                if (w < 0 || !ambient_[k].contains(w)) continue;
                std::vector<std::size_t> q = pos;
                q[k] = ambient_[k].index_of(w);
                if (grid_[cell(q)]) return false;
            }
        }
        return true;
    }

    static void require_same_ambient(const Staircase& a, const Staircase& b) {
        if (a.ambient_.size() != b.ambient_.size())
            throw DomainError("staircase operands have different ambient products");
        for (std::size_t k = 0; k < a.ambient_.size(); ++k)
            if (!(a.ambient_[k] == b.ambient_[k]))
                throw DomainError("staircase operands have different ambient products");
    }

    std::vector<NumericalSemigroup> ambient_;
    std::vector<std::vector<long long>> minimal_;
    std::vector<std::vector<long long>> axis_;
    std::vector<long long> box_;
    std::vector<long long> threshold_;
    std::vector<std::size_t> clamp_pos_;
    std::vector<std::size_t> stride_;
    std::vector<std::uint8_t> grid_;
    bool cofinite_ = false;
};

/// Ideal sum: union of the up-sets.
inline Staircase staircase_sum(const Staircase& a, const Staircase& b) {
    Staircase::require_same_ambient(a, b);
    std::vector<std::vector<long long>> gens = a.minimal_;
    gens.insert(gens.end(), b.minimal_.begin(), b.minimal_.end());
    return Staircase::from_generators(a.ambient_, std::move(gens));
}

/// Ideal product: up-closure of pairwise sums of minimal elements.
inline Staircase staircase_product(const Staircase& a, const Staircase& b) {
    Staircase::require_same_ambient(a, b);
    std::vector<std::vector<long long>> gens;
    gens.reserve(a.minimal_.size() * b.minimal_.size());
    for (const auto& g : a.minimal_)
        for (const auto& h : b.minimal_) {
            std::vector<long long> s(g.size());
            for (std::size_t k = 0; k < g.size(); ++k) s[k] = g[k] + h[k];
            gens.push_back(std::move(s));
        }
    return Staircase::from_generators(a.ambient_, std::move(gens));
}

/// Ideal intersection. The antichain is collected on a box generous enough
/// to contain every minimal element of the intersection, then rebuilt
/// canonically.
inline Staircase staircase_intersection(const Staircase& a, const Staircase& b) {
    Staircase::require_same_ambient(a, b);
    const std::size_t l = a.ambient_.size();
    Staircase tmp;
    tmp.ambient_ = a.ambient_;
    std::vector<long long> thresholds(l), boxes(l);
    for (std::size_t k = 0; k < l; ++k) {
        thresholds[k] = std::max(a.threshold_[k], b.threshold_[k]) + a.ambient_[k].conductor();
        boxes[k] = thresholds[k] + 2;
    }
    tmp.init_grid(boxes, thresholds);
    std::vector<std::size_t> pos(l, 0);
    std::vector<long long> point(l);
    for (;;) {
        for (std::size_t k = 0; k < l; ++k) point[k] = tmp.axis_[k][pos[k]];
        if (a.contains(point) && b.contains(point)) tmp.grid_[tmp.cell(pos)] = 1;
        if (!tmp.advance(pos)) break;
    }
    tmp.finish_from_grid("staircase_intersection");
    return Staircase::from_generators(a.ambient_, tmp.minimal_);
}

namespace detail {

// Fixed-width bitmask over element indices; big enough for the sweep boxes.
struct Mask {
    static constexpr std::size_t kWords = 3;
    std::array<std::uint64_t, kWords> w{};

    static Mask ones(std::size_t n) {
        Mask m;
        for (std::size_t i = 0; i < n; ++i) m.set(i);
        return m;
    }
    static Mask suffix(std::size_t from, std::size_t n) {
        Mask m;
        for (std::size_t i = from; i < n; ++i) m.set(i);
        return m;
    }
    void set(std::size_t i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    Mask& operator|=(const Mask& o) {
        for (std::size_t i = 0; i < kWords; ++i) w[i] |= o.w[i];
        return *this;
    }
    Mask& operator&=(const Mask& o) {
        for (std::size_t i = 0; i < kWords; ++i) w[i] &= o.w[i];
        return *this;
    }
    friend bool operator==(const Mask&, const Mask&) = default;
};

// Per-factor tables for the pairwise identity sweep: the element axis up to
// a shared bound, the principal up-set of every axis element as a mask, and
// the minimal elements of every level ideal {s >= s_j}. Axis position ==
// element index.
struct ClusterFactor {
    NumericalSemigroup s;
    int depth;
    std::vector<long long> axis;
    std::vector<Mask> up;                       // up[t] = positions q with axis[q]-axis[t] in S
    std::vector<std::vector<std::size_t>> level_min; // j = 0..depth

    ClusterFactor(const NumericalSemigroup& sg, int d) : s(sg), depth(d) {
        const long long bound =
            s.element(static_cast<std::size_t>(d) + 1) + 3 * s.conductor() + 4;
        axis = s.elements_up_to(bound);
        if (axis.size() > Mask::kWords * 64)
            throw DomainError("cluster factor axis exceeds the mask width");
        up.resize(axis.size());
        for (std::size_t t = 0; t < axis.size(); ++t)
            for (std::size_t q = t; q < axis.size(); ++q)
                if (s.contains(axis[q] - axis[t])) up[t].set(q);
        level_min.resize(static_cast<std::size_t>(d) + 1);
        level_min[0] = {0};
        for (int j = 1; j <= d; ++j) {
            auto& mins = level_min[static_cast<std::size_t>(j)];
            for (std::size_t q = static_cast<std::size_t>(j); q < axis.size(); ++q) {
                bool minimal = true;
                for (std::size_t t = static_cast<std::size_t>(j); t < q && minimal; ++t)
                    if (s.contains(axis[q] - axis[t])) minimal = false;
                if (minimal) mins.push_back(q);
                // minimal elements of {s >= s_j} all lie below s_j + c
                if (axis[q] >= s.element(static_cast<std::size_t>(j)) + s.conductor()) break;
            }
        }
    }
};

// Builds the three expression grids of the product-of-clusters identity for
// level i over rows = factor-1 element indices, columns = factor-2 element
// indices: A = sum of products, B = sum of intersections, C = intersection
// of sums (with the index shift exactly as displayed in the source
// identity).
struct IdentityGrids {
    std::vector<Mask> a, b, c;
    bool equal = false;
};

inline IdentityGrids identity_grids(const ClusterFactor& f1, const ClusterFactor& f2, int i) {
    if (i + 1 > f1.depth || i + 1 > f2.depth)
        throw DomainError("identity level exceeds the flag cluster depth");
    const std::size_t rows = f1.axis.size(), cols = f2.axis.size();
    IdentityGrids g;
    g.a.assign(rows, Mask{});
    g.b.assign(rows, Mask{});
    g.c.assign(rows, Mask::ones(cols));
    for (int j = 0; j <= i + 1; ++j) {
        // A += m~_j * n~_{i+1-j}
        for (std::size_t t : f1.level_min[static_cast<std::size_t>(j)])
            for (std::size_t u : f2.level_min[static_cast<std::size_t>(i + 1 - j)]) {
                const Mask& colmask = f2.up[u];
                const Mask& rowmask = f1.up[t];
                for (std::size_t word = 0; word < Mask::kWords; ++word) {
                    std::uint64_t bits = rowmask.w[word];
                    while (bits) {
                        const std::size_t r = (word << 6) + static_cast<std::size_t>(std::countr_zero(bits));
                        bits &= bits - 1;
                        g.a[r] |= colmask;
                    }
                }
            }
        // B += m~_j ∩ n~_{i+1-j}
        const Mask colsuffix = Mask::suffix(static_cast<std::size_t>(i + 1 - j), cols);
        for (std::size_t r = static_cast<std::size_t>(j); r < rows; ++r) g.b[r] |= colsuffix;
    }
    for (int j = 1; j <= i + 1; ++j) {
        // C ∩= (m~_j + n~_{i+2-j})
        const Mask colmask = Mask::suffix(static_cast<std::size_t>(i + 2 - j), cols);
        const std::size_t fullrows = std::min<std::size_t>(static_cast<std::size_t>(j), rows);
        for (std::size_t r = 0; r < fullrows; ++r) g.c[r] &= colmask;
    }
    g.equal = g.a == g.b && g.b == g.c;
    return g;
}

} // namespace detail

/// Special-fiber flag cluster of a monomial curve: the nested chain of
/// order-filtration ideals a_1 ⊋ a_2 ⊋ ... ⊋ a_depth, a_j = {s in S : s >= s_j},
/// with colength(a_j) = j.
struct FlagCluster {
    NumericalSemigroup s;
    int depth = 0;
    std::vector<Staircase> levels;                       // levels[j-1] = a_j
    std::shared_ptr<const detail::ClusterFactor> factor; // sweep tables

    const Staircase& level(int j) const {
        if (j < 1 || j > depth) throw DomainError("flag cluster level out of range");
        return levels[static_cast<std::size_t>(j) - 1];
    }
};

inline FlagCluster flag_cluster(const NumericalSemigroup& s, int depth) {
    if (depth < 1) throw DomainError("flag_cluster: depth must be >= 1");
    FlagCluster fc;
    fc.s = s;
    fc.depth = depth;
    fc.factor = std::make_shared<detail::ClusterFactor>(s, depth);
    for (int j = 1; j <= depth; ++j) {
        std::vector<std::vector<long long>> gens;
        for (std::size_t q : fc.factor->level_min[static_cast<std::size_t>(j)])
            gens.push_back({fc.factor->axis[q]});
        Staircase level = Staircase::from_generators({s}, std::move(gens));
        if (level.colength() != j)
            throw InternalCheckError("flag cluster level has wrong colength");
        if (j > 1) {
            for (const auto& g : level.minimal_elements())
                if (!fc.levels.back().contains(g))
                    throw InternalCheckError("flag cluster levels are not nested");
        }
        fc.levels.push_back(std::move(level));
    }
    return fc;
}

/// Outcome of the product-of-clusters identity at one level: the common
/// staircase, the verification flag (always true on return; a violation
/// throws) and its colength.
struct IdentityResult {
    Staircase cluster;
    bool verified = false;
    long long colength = 0;
};

namespace detail {

inline std::vector<std::vector<long long>> antichain_of_grid(const ClusterFactor& f1,
                                                             const ClusterFactor& f2,
                                                             const std::vector<Mask>& grid) {
    std::vector<std::vector<long long>> out;
    for (std::size_t r = 0; r < f1.axis.size(); ++r)
        for (std::size_t q = 0; q < f2.axis.size(); ++q) {
            if (!grid[r].test(q)) continue;
            bool minimal = true;
            for (long long a : f1.s.minimal_generators()) {
                const long long w = f1.axis[r] - a;
                if (w >= 0 && f1.s.contains(w) && grid[f1.s.index_of(w)].test(q)) {
                    minimal = false;
                    break;
                }
            }
            for (long long a : f2.s.minimal_generators()) {
                if (!minimal) break;
                const long long w = f2.axis[q] - a;
                if (w >= 0 && f2.s.contains(w) && grid[r].test(f2.s.index_of(w))) minimal = false;
            }
            if (minimal) out.push_back({f1.axis[r], f2.axis[q]});
        }
    return out;
}

} // namespace detail

/// Computes the three expressions of the product-of-clusters identity
/// (sum of products, sum of intersections, intersection of sums) for the
/// level-i clusters of U and V, asserts they coincide, and returns the
/// common staircase. When both factors are trivial the colength must be
/// binom(2+i, i).
inline IdentityResult product_cluster_identity(const FlagCluster& u, const FlagCluster& v, int i) {
    if (i < 0) throw DomainError("product_cluster_identity: i must be >= 0");
    const detail::IdentityGrids grids = detail::identity_grids(*u.factor, *v.factor, i);
    if (!grids.equal)
        throw IdentityViolation("product cluster identity fails for " + u.s.to_string() + " x " +
                                v.s.to_string() + " at level " + std::to_string(i));
    IdentityResult out{
        Staircase::from_generators({u.s, v.s}, detail::antichain_of_grid(*u.factor, *v.factor, grids.a)),
        true, 0};
    out.colength = out.cluster.colength();
    if (u.s.is_trivial() && v.s.is_trivial()) {
        const long long expected = static_cast<long long>(i + 1) * (i + 2) / 2;
        if (out.colength != expected)
            throw IdentityViolation("smooth-case cluster length is not binom(2+i,i) at level " +
                                    std::to_string(i));
    }
    return out;
}

/// Regularity criterion for products of monomial curves: for every factor
/// there is 1 <= m_i <= n+1 with s_{i,m_i} - 1 in S_i. The simple mode
/// requires at least two factors.
inline bool product_regular(const std::vector<NumericalSemigroup>& factors, int n, BlowupMode mode) {
    if (factors.empty()) throw DomainError("product_regular: need at least one factor");
    if (n < 0) throw DomainError("product_regular: n must be >= 0");
    if (mode == BlowupMode::simple && factors.size() < 2)
        throw SimpleRequiresTwoFactors("simple product regularity needs l >= 2");
    for (const auto& s : factors) {
        bool found = false;
        for (std::size_t m = 1; m <= static_cast<std::size_t>(n) + 1 && !found; ++m)
            if (s.contains(s.element(m) - 1)) found = true;
        if (!found) return false;
    }
    return true;
}

/// Whether the tangent map xi_i kills the generator prod_j h_{j,m_j,0} of
/// the special-fiber ideal: true exactly when s_{i,m_i} - 1 is NOT in S_i.
inline bool xi_vanishes(const std::vector<NumericalSemigroup>& factors, std::size_t i,
                        const std::vector<int>& assignment) {
    if (assignment.size() != factors.size())
        throw DomainError("xi_vanishes: assignment length must match the factor count");
    if (i >= factors.size()) throw DomainError("xi_vanishes: factor index out of range");
    long long total = 0;
    for (int m : assignment) {
        if (m < 0) throw DomainError("xi_vanishes: assignment entries must be >= 0");
        total += m;
    }
    if (total < 1) throw DomainError("xi_vanishes: assignment must sum to n+1 >= 1");
    const auto& s = factors[i];
    return !s.contains(s.element(static_cast<std::size_t>(assignment[i])) - 1);
}

/// Decides T ⊉ U by testing the generators of U against T.
inline bool not_contained(const Staircase& t, const Staircase& u) {
    for (const auto& g : u.minimal_elements())
        if (!t.contains(g)) return true;
    return false;
}

} // namespace nashcurve
