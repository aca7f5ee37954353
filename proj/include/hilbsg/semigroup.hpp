#pragma once

/**
 * @file semigroup.hpp
 * @brief Affine semigroup rings k[S]: membership, colengths of monomial
 *        ideals, colon by the maximal ideal, and the normalization gap.
 *
 * A monomial ideal I of k[S] is determined by the lattice points it
 * contains, the union of translates g + S over its generators, so every
 * length here is a lattice-point count.
 *
 * Finiteness of S \ I is certified rather than guessed: if k_j * s_j lies in
 * I for every semigroup generator s_j, then any point with some coefficient
 * c_j >= k_j is in I, so S \ I sits inside the box spanned by the sums
 * sum_j (k_j - 1) * s_j.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <vector>

#include "hilbsg/errors.hpp"
#include "hilbsg/polyring.hpp"

namespace hilbsg {

struct SemigroupOptions {
    /// Largest coordinate the membership table may cover on any axis.
    std::int64_t axis_cap = std::int64_t{1} << 14;
    /// Largest total number of cells in the membership table.
    std::uint64_t volume_cap = std::uint64_t{1} << 27;
    /// Largest multiple k tried when searching for k * s inside an ideal.
    std::int64_t max_multiple = std::int64_t{1} << 14;
};

namespace detail {

inline bool nonnegative(const LatticePoint& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

inline LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline LatticePoint scale(std::int64_t k, const LatticePoint& a) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

/// Dense membership table over a box [0, extent] that grows on demand.
/// Readers share the lock; a growth rebuilds the table under the unique lock.
class MembershipCache {
public:
    MembershipCache(std::size_t dim, std::vector<LatticePoint> gens, SemigroupOptions opts)
        : dim_(dim), gens_(std::move(gens)), opts_(opts), extent_(dim, -1) {}

    bool contains(const LatticePoint& v) {
        {
            std::shared_lock lock(mu_);
            if (inside(v)) return table_[index(v)] != 0;
        }
        std::unique_lock lock(mu_);
        if (!inside(v)) grow(v);
        return table_[index(v)] != 0;
    }

    LatticePoint extent() const {
        std::shared_lock lock(mu_);
        return extent_;
    }

private:
    bool inside(const LatticePoint& v) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (v[i] > extent_[i]) return false;
        return true;
    }

    std::size_t index(const LatticePoint& v) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < dim_; ++i) idx = idx * static_cast<std::size_t>(extent_[i] + 1) + v[i];
        return idx;
    }

    void grow(const LatticePoint& v) {
        LatticePoint next(dim_);
        std::uint64_t volume = 1;
        for (std::size_t i = 0; i < dim_; ++i) {
            std::int64_t want = std::max(v[i], extent_[i]);
            std::int64_t e = std::max<std::int64_t>(15, extent_[i]);
            while (e < want) e = 2 * e + 1;
            if (want > opts_.axis_cap)
                throw NotCofinite("semigroup membership query beyond the axis cap " + std::to_string(opts_.axis_cap));
            next[i] = std::min(e, opts_.axis_cap);
            volume *= static_cast<std::uint64_t>(next[i] + 1);
            if (volume > opts_.volume_cap) throw NotCofinite("semigroup membership table exceeds the volume cap");
        }
        extent_ = std::move(next);
        table_.assign(volume, 0);
        table_[0] = 1;
        LatticePoint p(dim_, 0);
        for (std::size_t flat = 1; flat < volume; ++flat) {
            // advance p in row-major order (last axis fastest)
            for (std::size_t i = dim_; i-- > 0;) {
                if (p[i] < extent_[i]) {
                    ++p[i];
                    break;
                }
                p[i] = 0;
            }
            for (const auto& g : gens_) {
                bool fits = true;
                for (std::size_t i = 0; i < dim_ && fits; ++i) fits = p[i] >= g[i];
                if (!fits) continue;
                if (table_[flat - index(g)] != 0) {
                    table_[flat] = 1;
                    break;
                }
            }
        }
    }

    std::size_t dim_;
    std::vector<LatticePoint> gens_;
    SemigroupOptions opts_;
    mutable std::shared_mutex mu_;
    LatticePoint extent_;
    std::vector<char> table_;
};

}  // namespace detail

class AffineSemigroup {
public:
    AffineSemigroup(std::size_t dim, std::vector<LatticePoint> gens, SemigroupOptions opts = {})
        : dim_(dim), opts_(opts) {
        if (gens.empty()) throw Error("a semigroup needs at least one generator");
        for (const auto& g : gens) {
            if (g.size() != dim) throw ArityMismatch("semigroup generator has the wrong dimension");
            if (!detail::nonnegative(g)) throw Error("semigroup generators must be nonnegative");
            if (std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; }))
                throw Error("semigroup generators must be nonzero");
            if (std::find(gens_.begin(), gens_.end(), g) != gens_.end())
                throw Error("semigroup generators must be pairwise distinct");
            gens_.push_back(g);
        }
        cache_ = std::make_shared<detail::MembershipCache>(dim_, gens_, opts_);
    }

    static AffineSemigroup from_ring(const RingSpec& ring, SemigroupOptions opts = {}) {
        if (ring.is_polynomial()) throw Error("ring is not in semigroup mode");
        return AffineSemigroup(ring.sg_dim, ring.sg_gens, opts);
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticePoint>& gens() const noexcept { return gens_; }
    const SemigroupOptions& options() const noexcept { return opts_; }

    bool contains(const LatticePoint& v) const {
        if (v.size() != dim_) throw ArityMismatch("lattice point has the wrong dimension");
        if (!detail::nonnegative(v)) return false;
        return cache_->contains(v);
    }

    LatticePoint cached_extent() const { return cache_->extent(); }

private:
    std::size_t dim_;
    std::vector<LatticePoint> gens_;
    SemigroupOptions opts_;
    std::shared_ptr<detail::MembershipCache> cache_;
};

/// True iff v is a nonnegative integer combination of the generators.
inline bool sg_membership(const AffineSemigroup& s, const LatticePoint& v) { return s.contains(v); }

class SemigroupIdeal {
public:
    SemigroupIdeal(AffineSemigroup semigroup, std::vector<LatticePoint> gens)
        : semigroup_(std::move(semigroup)) {
        for (auto& g : gens) {
            if (!semigroup_.contains(g)) throw Error("semigroup ideal generator is not in the semigroup");
            if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
        }
        if (gens_.empty()) throw Error("a semigroup ideal needs at least one generator");
    }

    const AffineSemigroup& semigroup() const noexcept { return semigroup_; }
    const std::vector<LatticePoint>& gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool contains(const LatticePoint& v) const {
        for (const auto& g : gens_) {
            LatticePoint d = detail::sub(v, g);
            if (detail::nonnegative(d) && semigroup_.contains(d)) return true;
        }
        return false;
    }

private:
    AffineSemigroup semigroup_;
    std::vector<LatticePoint> gens_;
};

/// I^k: all sums of k generators (with repetition), deduplicated and sorted.
inline SemigroupIdeal sg_ideal_power(const SemigroupIdeal& ideal, std::size_t k) {
    if (k == 0) throw Error("ideal_power: exponent must be at least 1");
    const auto& g = ideal.gens();
    std::vector<LatticePoint> out;
    std::vector<LatticePoint> prefix(k + 1, LatticePoint(ideal.semigroup().dim(), 0));
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == k) {
            out.push_back(prefix[k]);
            return;
        }
        for (std::size_t i = start; i < g.size(); ++i) {
            prefix[depth + 1] = detail::add(prefix[depth], g[i]);
            self(self, depth + 1, i);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SemigroupIdeal(ideal.semigroup(), std::move(out));
}

enum class SgCombineKind { sum, product };

inline SemigroupIdeal sg_ideal_combine(SgCombineKind kind, const SemigroupIdeal& a, const SemigroupIdeal& b) {
    std::vector<LatticePoint> out;
    if (kind == SgCombineKind::sum) {
        out = a.gens();
        out.insert(out.end(), b.gens().begin(), b.gens().end());
    } else {
        for (const auto& x : a.gens())
            for (const auto& y : b.gens()) out.push_back(detail::add(x, y));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SemigroupIdeal(a.semigroup(), std::move(out));
}

/// Lattice points of S \ I in lexicographic order. Throws NotCofinite when
/// some generator of S has no multiple inside I below max_multiple.
inline std::vector<LatticePoint> sg_complement(const SemigroupIdeal& ideal) {
    const AffineSemigroup& s = ideal.semigroup();
    const std::size_t dim = s.dim();
    LatticePoint box(dim, 0);
    for (const auto& g : s.gens()) {
        std::int64_t k = 1;
        while (!ideal.contains(detail::scale(k, g))) {
            if (++k > s.options().max_multiple)
                throw NotCofinite("ideal is not primary to the maximal ideal: no multiple of a semigroup generator "
                                  "lies in it below the configured bound");
        }
        for (std::size_t i = 0; i < dim; ++i) box[i] += (k - 1) * g[i];
    }
    std::vector<LatticePoint> out;
    LatticePoint p(dim, 0);
    while (true) {
        if (s.contains(p) && !ideal.contains(p)) out.push_back(p);
        std::size_t i = dim;
        while (i > 0) {
            --i;
            if (p[i] < box[i]) {
                ++p[i];
                break;
            }
            p[i] = 0;
            if (i == 0) return out;
        }
        if (dim == 0) return out;
    }
}

/// Colength of I in k[S], i.e. |S \ I|.
inline std::uint64_t sg_length(const SemigroupIdeal& ideal) { return sg_complement(ideal).size(); }

struct SgColonResult {
    SemigroupIdeal ideal;
    std::vector<LatticePoint> socle_points;
};

/// I : m where m is generated by all semigroup generators. The socle points
/// are the v in S \ I with v + s in I for every generator s; the colon is
/// generated by gens(I) together with them.
inline SgColonResult sg_colon_max(const SemigroupIdeal& ideal) {
    std::vector<LatticePoint> socle;
    for (const auto& v : sg_complement(ideal)) {
        bool top = std::all_of(ideal.semigroup().gens().begin(), ideal.semigroup().gens().end(),
                               [&](const LatticePoint& g) { return ideal.contains(detail::add(v, g)); });
        if (top) socle.push_back(v);
    }
    std::vector<LatticePoint> gens = ideal.gens();
    gens.insert(gens.end(), socle.begin(), socle.end());
    return {SemigroupIdeal(ideal.semigroup(), std::move(gens)), std::move(socle)};
}

namespace detail {

inline std::int64_t cross(const LatticePoint& a, const LatticePoint& b) { return a[0] * b[1] - a[1] * b[0]; }

/// Triangular basis (a, b), (0, c) of the group generated by plane vectors.
struct PlaneLattice {
    std::int64_t a = 0, b = 0, c = 0;

    bool contains(const LatticePoint& v) const {
        if (v[0] % a != 0) return false;
        std::int64_t k = v[0] / a;
        return (v[1] - k * b) % c == 0;
    }
};

inline PlaneLattice plane_lattice(const std::vector<LatticePoint>& gens) {
    LatticePoint pivot{0, 0};
    std::int64_t c = 0;
    for (const auto& g : gens) {
        LatticePoint u = g;
        while (u[0] != 0) {
            if (pivot[0] == 0) {
                pivot = u;
                u = {0, 0};
                break;
            }
            std::int64_t q = u[0] / pivot[0];
            u = sub(u, scale(q, pivot));
            if (u[0] != 0) std::swap(u, pivot);
        }
        c = std::gcd(c, u[1]);
    }
    if (pivot[0] < 0) pivot = scale(-1, pivot);
    PlaneLattice lat{pivot[0], pivot[1], c};
    if (lat.a == 0 || lat.c == 0) throw Error("semigroup does not generate a rank-2 group");
    lat.b = ((lat.b % lat.c) + lat.c) % lat.c;
    return lat;
}

}  // namespace detail

/// Points of the normalization (group(S) ∩ cone(S)) missing from S, for a
/// plane semigroup with two distinct extreme rays. Sorted lexicographically.
///
/// Write e1, e2 for generators on the two extreme rays. Every point of the
/// normalization is p + i*e1 + j*e2 with p in the half-open parallelogram
/// spanned by e1, e2. For fixed p the indices (i, j) landing in S form an
/// up-set of N^2, so its complement lies in [0, i0) x [0, j0) where i0, j0 are
/// the first hits along each axis.
inline std::vector<LatticePoint> sg_closure_gap(const AffineSemigroup& s) {
    using detail::cross;
    if (s.dim() != 2) throw NotDim2("sg_closure_gap is implemented for plane semigroups only");
    const auto& gens = s.gens();
    auto shorter = [](const LatticePoint& x, const LatticePoint& y) { return x[0] + x[1] < y[0] + y[1]; };
    LatticePoint e1 = gens.front(), e2 = gens.front();
    for (const auto& g : gens) {
        std::int64_t c1 = cross(e1, g);
        if (c1 < 0 || (c1 == 0 && shorter(g, e1))) e1 = g;
        std::int64_t c2 = cross(e2, g);
        if (c2 > 0 || (c2 == 0 && shorter(g, e2))) e2 = g;
    }
    const std::int64_t det = cross(e1, e2);
    if (det == 0) throw Error("sg_closure_gap: the generator cone has a single extreme ray");
    const auto lattice = detail::plane_lattice(gens);
    const std::int64_t cap = s.options().max_multiple;

    auto first_hit = [&](const LatticePoint& p, const LatticePoint& step) {
        LatticePoint v = p;
        for (std::int64_t i = 0; i <= cap; ++i, v = detail::add(v, step))
            if (s.contains(v)) return i;
        throw NotFinite("normalization gap did not close within the configured bound");
    };

    std::vector<LatticePoint> out;
    try {
        for (std::int64_t x = 0; x <= e1[0] + e2[0]; ++x) {
            for (std::int64_t y = 0; y <= e1[1] + e2[1]; ++y) {
                LatticePoint p{x, y};
                std::int64_t alpha = cross(p, e2), beta = cross(e1, p);
                if (alpha < 0 || alpha >= det || beta < 0 || beta >= det) continue;
                if (!lattice.contains(p)) continue;
                std::int64_t i0 = first_hit(p, e1), j0 = first_hit(p, e2);
                for (std::int64_t i = 0; i < i0; ++i)
                    for (std::int64_t j = 0; j < j0; ++j) {
                        LatticePoint v = detail::add(p, detail::add(detail::scale(i, e1), detail::scale(j, e2)));
                        if (!s.contains(v)) out.push_back(std::move(v));
                    }
            }
        }
    } catch (const NotCofinite& e) {
        throw NotFinite(e.what());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hilbsg
