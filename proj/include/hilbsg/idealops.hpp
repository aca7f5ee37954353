#pragma once

// Ideal algebra in a quotient R = P / J0 of a polynomial ring P: sums,
// products, powers, intersections and colon ideals. Intersections and colons
// go through the auxiliary-variable elimination t*A + (1 - t)*B.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "hilbsg/errors.hpp"
#include "hilbsg/groebner.hpp"
#include "hilbsg/polyring.hpp"

namespace hilbsg {

struct IdealOptions {
    /// Generator count above which products and powers drop generators
    /// that divide to zero by the remaining ones.
    std::size_t interreduce_threshold = 64;
};

class Ideal {
public:
    Ideal(RingSpec ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
        if (!ring_.is_polynomial()) throw Error("Ideal needs a polynomial-mode ring");
        for (auto& g : gens) {
            if (g.arity() != ring_.arity()) throw ArityMismatch("ideal generator arity differs from the ring");
            Polynomial h = g.with_order(ring_.order);
            if (h.is_zero()) continue;
            if (std::none_of(gens_.begin(), gens_.end(), [&](const Polynomial& x) { return x == h; }))
                gens_.push_back(std::move(h));
        }
        if (gens_.empty()) throw Error("an ideal needs at least one nonzero generator");
        unit_ = std::any_of(gens_.begin(), gens_.end(), [](const Polynomial& p) { return p.is_constant(); });
    }

    /// Maximal ideal at the origin.
    static Ideal maximal(const RingSpec& ring) {
        std::vector<Polynomial> v;
        for (std::size_t i = 0; i < ring.arity(); ++i) v.push_back(ring.var(i));
        return Ideal(ring, std::move(v));
    }

    const RingSpec& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    /// True when the ideal is known to contain a unit of R.
    bool is_unit() const noexcept { return unit_; }

    /// Groebner basis of the preimage gens + J0 in the ambient ring.
    GroebnerBasis basis() const { return buchberger(detail::combined_gens(ring_, gens_), ring_.order); }

    bool contains(const Polynomial& f) const { return ideal_contains(basis(), f); }

private:
    friend Ideal mark_unit(Ideal);
    RingSpec ring_;
    std::vector<Polynomial> gens_;
    bool unit_ = false;
};

namespace detail {

inline void require_same_ring(const Ideal& a, const Ideal& b) {
    if (!(a.ring() == b.ring())) throw Error("ideals live in different rings");
}

/// Drops generators that divide to zero by the remaining ones plus J0.
inline std::vector<Polynomial> interreduce(const RingSpec& ring, std::vector<Polynomial> gens) {
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<Polynomial> others(ring.quotient_gens.begin(), ring.quotient_gens.end());
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (k != i) others.push_back(gens[k]);
        if (detail::reduce(gens[i], others, ring.order).is_zero())
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return gens;
}

inline std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return structurally_less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

/// Lifts f in k[x] to k[t, x] (t becomes variable 0).
inline Polynomial lift_with_t(const Polynomial& f, const MonomialOrder& order, std::uint32_t t_power = 0) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(f.arity() + 1);
        e.push_back(t_power);
        e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(f.arity() + 1, order, std::move(terms));
}

inline Polynomial drop_t(const Polynomial& f, const MonomialOrder& order) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(f.arity() - 1, order, std::move(terms));
}

/// Generators of (a) ∩ (b) in the ambient polynomial ring via elimination of
/// t from t*a + (1 - t)*b: the t-free part of an elimination Groebner basis.
inline std::vector<Polynomial> intersect_gens(std::span<const Polynomial> a, std::span<const Polynomial> b,
                                              const MonomialOrder& target) {
    MonomialOrder elim = MonomialOrder::elimination(1);
    std::vector<Polynomial> gens;
    for (const auto& f : a) gens.push_back(lift_with_t(f, elim, 1));
    for (const auto& f : b) gens.push_back(lift_with_t(f, elim, 0) - lift_with_t(f, elim, 1));
    GroebnerBasis gb = buchberger(gens, elim);
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens())
        if (g.leading_monomial()[0] == 0) out.push_back(drop_t(g, target));
    return out;
}

/// Exact quotient h / f; a nonzero remainder is an internal defect.
inline Polynomial exact_divide(const Polynomial& h, const Polynomial& f0) {
    const Polynomial f = f0.with_order(h.order());
    Polynomial rest = h;
    std::vector<Term> quotient;
    while (!rest.is_zero()) {
        if (!f.leading_monomial().divides(rest.leading_monomial()))
            throw std::logic_error("exact_divide: divisor does not divide an intersection generator");
        Monomial m = rest.leading_monomial().quotient(f.leading_monomial());
        Rational c = rest.leading_coeff() / f.leading_coeff();
        quotient.push_back({m, c});
        rest -= f.scaled(c, m);
    }
    return Polynomial::from_terms(h.arity(), h.order(), std::move(quotient));
}

}  // namespace detail

inline Ideal mark_unit(Ideal ideal) {
    ideal.unit_ = true;
    return ideal;
}

enum class CombineKind { sum, product };

inline Ideal ideal_combine(CombineKind kind, const Ideal& a, const Ideal& b, const IdealOptions& opts = {}) {
    detail::require_same_ring(a, b);
    std::vector<Polynomial> gens;
    if (kind == CombineKind::sum) {
        gens = a.gens();
        gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    } else {
        for (const auto& f : a.gens())
            for (const auto& g : b.gens()) gens.push_back(f * g);
        gens = detail::dedupe(std::move(gens));
    }
    if (gens.size() > opts.interreduce_threshold) gens = detail::interreduce(a.ring(), std::move(gens));
    return Ideal(a.ring(), std::move(gens));
}

/// A^k, generated by all products of k generators of A (with repetition).
inline Ideal ideal_power(const Ideal& a, std::size_t k, const IdealOptions& opts = {}) {
    if (k == 0) throw Error("ideal_power: exponent must be at least 1");
    // Multisets of size k are enumerated as nondecreasing index sequences.
    const auto& g = a.gens();
    std::vector<Polynomial> out;
    std::vector<Polynomial> prefix(k + 1);
    prefix[0] = a.ring().one();
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == k) {
            out.push_back(prefix[k]);
            return;
        }
        for (std::size_t i = start; i < g.size(); ++i) {
            prefix[depth + 1] = prefix[depth] * g[i];
            self(self, depth + 1, i);
        }
    };
    rec(rec, 0, 0);
    out = detail::dedupe(std::move(out));
    if (out.size() > opts.interreduce_threshold) out = detail::interreduce(a.ring(), std::move(out));
    return Ideal(a.ring(), std::move(out));
}

/// A ∩ B in P (J0 is not added; both ideals are taken as ideals of P).
inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    detail::require_same_ring(a, b);
    auto gens = detail::intersect_gens(a.gens(), b.gens(), a.ring().order);
    if (gens.empty()) throw Error("ideal_intersect: intersection is the zero ideal");
    return Ideal(a.ring(), std::move(gens));
}

/// A : B in R = P / J0, computed as (A + J0) : B in P and mapped back.
/// The result is flagged as a unit ideal when it contains 1.
inline Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    detail::require_same_ring(a, b);
    const RingSpec& ring = a.ring();
    auto lifted = detail::combined_gens(ring, a.gens());
    GroebnerBasis j0 = buchberger(ring.quotient_gens, ring.order);

    std::vector<std::vector<Polynomial>> pieces;
    for (const auto& f0 : b.gens()) {
        Polynomial f = j0.is_zero_ideal() ? f0 : normal_form(f0, j0);
        if (f.is_zero()) continue;  // A : 0 = R
        std::vector<Polynomial> single{f};
        auto meet = detail::intersect_gens(lifted, single, ring.order);
        std::vector<Polynomial> piece;
        for (const auto& h : meet) piece.push_back(detail::exact_divide(h, f));
        pieces.push_back(std::move(piece));
    }
    if (pieces.empty()) return mark_unit(Ideal(ring, {ring.one()}));

    std::vector<Polynomial> acc = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) acc = detail::intersect_gens(acc, pieces[i], ring.order);

    GroebnerBasis result = buchberger(detail::combined_gens(ring, acc), ring.order);
    if (result.contains_unit()) return mark_unit(Ideal(ring, {ring.one()}));

    std::vector<Polynomial> images;
    for (const auto& g : acc) {
        Polynomial h = j0.is_zero_ideal() ? g : normal_form(g, j0);
        if (!h.is_zero()) images.push_back(h.monic());
    }
    images = detail::dedupe(std::move(images));
    return Ideal(ring, std::move(images));
}

}  // namespace hilbsg
