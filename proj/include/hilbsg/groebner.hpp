#pragma once

// Reduced Groebner bases (Buchberger with the product and chain criteria),
// normal forms, standard monomials, and colength of zero-dimensional ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hilbsg/errors.hpp"
#include "hilbsg/polyring.hpp"

namespace hilbsg {

class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(std::size_t arity, MonomialOrder order, std::vector<Polynomial> gens)
        : arity_(arity), order_(order), gens_(std::move(gens)) {
        leading_.reserve(gens_.size());
        for (const auto& g : gens_) leading_.push_back(g.leading_monomial());
    }

    std::size_t arity() const noexcept { return arity_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& gens() const noexcept { return gens_; }
    const std::vector<Monomial>& leading() const noexcept { return leading_; }
    bool contains_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_constant(); }
    bool is_zero_ideal() const noexcept { return gens_.empty(); }

private:
    std::size_t arity_ = 0;
    MonomialOrder order_;
    std::vector<Polynomial> gens_;
    std::vector<Monomial> leading_;
};

namespace detail {

struct Descending {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }
};

/// Full reduction of f by an arbitrary divisor list (first divisor whose
/// leading monomial divides wins). With a Groebner basis this is the unique
/// normal form; otherwise it is only a division remainder.
inline Polynomial reduce(const Polynomial& f0, std::span<const Polynomial> divisors, const MonomialOrder& order) {
    Polynomial f = f0.with_order(order);
    std::map<Monomial, Rational, Descending> rest(Descending{order});
    for (const auto& t : f.terms()) rest.emplace(t.mono, t.coeff);
    std::vector<Term> out;
    while (!rest.empty()) {
        auto top = rest.begin();
        const Polynomial* hit = nullptr;
        for (const auto& g : divisors) {
            if (!g.is_zero() && g.leading_monomial().divides(top->first)) {
                hit = &g;
                break;
            }
        }
        if (hit == nullptr) {
            out.push_back({top->first, top->second});
            rest.erase(top);
            continue;
        }
        Monomial shift = top->first.quotient(hit->leading_monomial());
        Rational factor = top->second / hit->leading_coeff();
        rest.erase(top);
        const auto& gt = hit->terms();
        for (std::size_t k = 1; k < gt.size(); ++k) {
            Monomial m = gt[k].mono * shift;
            auto [it, inserted] = rest.try_emplace(std::move(m), 0);
            it->second -= factor * gt[k].coeff;
            if (it->second == 0) rest.erase(it);
        }
    }
    return Polynomial::from_terms(f.arity(), order, std::move(out));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    return f.scaled(1 / f.leading_coeff(), l.quotient(f.leading_monomial())) -
           g.scaled(1 / g.leading_coeff(), l.quotient(g.leading_monomial()));
}

}  // namespace detail

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.arity() != basis.arity())
        throw ArityMismatch("normal_form: polynomial arity " + std::to_string(f.arity()) + " vs basis arity " +
                            std::to_string(basis.arity()));
    return detail::reduce(f, basis.gens(), basis.order());
}

inline bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) { return normal_form(f, basis).is_zero(); }

/// Reduced Groebner basis of the ideal generated by `gens`.
///
/// Pairs are selected by the normal strategy (smallest lcm under `order`),
/// ties broken by generator index, so the output is deterministic. The
/// returned generators are monic and sorted by ascending leading monomial.
inline GroebnerBasis buchberger(std::span<const Polynomial> input, const MonomialOrder& order) {
    std::size_t arity = input.empty() ? 0 : input.front().arity();
    for (const auto& f : input)
        if (f.arity() != arity) throw ArityMismatch("buchberger: generators have different arities");

    std::vector<Polynomial> G;
    for (const auto& f : input) {
        Polynomial g = f.with_order(order);
        if (g.is_zero()) continue;
        if (g.is_constant()) return GroebnerBasis(arity, order, {Polynomial::constant(arity, order, 1)});
        g = g.monic();
        if (std::none_of(G.begin(), G.end(), [&](const Polynomial& h) { return h == g; })) G.push_back(std::move(g));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    // status[i][j] (i < j): 1 while the pair is pending, 0 once treated.
    std::vector<std::vector<char>> status;
    std::vector<Pair> pending;

    auto add_pairs_for = [&](std::size_t j) {
        status.emplace_back(j + 1, 0);
        for (auto& row : status) row.resize(G.size(), 0);
        for (std::size_t i = 0; i < j; ++i) {
            status[i][j] = 1;
            pending.push_back({i, j, G[i].leading_monomial().lcm(G[j].leading_monomial())});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return status[a][b] == 1;
    };

    while (!pending.empty()) {
        auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
            auto c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        Pair p = std::move(*best);
        pending.erase(best);
        status[p.i][p.j] = 0;

        const Monomial& li = G[p.i].leading_monomial();
        const Monomial& lj = G[p.j].leading_monomial();
        if (li.coprime(lj)) continue;  // product criterion
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == p.i || k == p.j) continue;
            if (G[k].leading_monomial().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
        }
        if (chain) continue;

        Polynomial h = detail::reduce(detail::s_polynomial(G[p.i], G[p.j]), G, order);
        if (h.is_zero()) continue;
        if (h.is_constant()) return GroebnerBasis(arity, order, {Polynomial::constant(arity, order, 1)});
        G.push_back(h.monic());
        add_pairs_for(G.size() - 1);
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another's (for equal leading monomials keep the earliest).
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
            if (k == i) continue;
            const auto& lk = G[k].leading_monomial();
            const auto& li = G[i].leading_monomial();
            if (lk.divides(li) && (!(lk == li) || k < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // Interreduce tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        const Polynomial& g = minimal[i];
        Polynomial tail = Polynomial::from_terms(arity, order, std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
        minimal[i] = (Polynomial::monomial(g.leading_monomial(), 1, order) + detail::reduce(tail, others, order)).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(arity, order, std::move(minimal));
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    return buchberger(std::span<const Polynomial>(gens), order);
}

struct StandardMonomialSet {
    bool finite = false;
    std::vector<Monomial> members;  // filled only when finite

    std::size_t size() const noexcept { return members.size(); }
};

/// Monomials outside the leading-term ideal. Finite iff every variable has a
/// pure power among the leading monomials. Members are listed in
/// lexicographic order of exponent vectors.
inline StandardMonomialSet standard_monomials(const GroebnerBasis& basis, std::size_t limit = 50'000'000) {
    StandardMonomialSet out;
    std::size_t n = basis.arity();
    if (basis.contains_unit()) {
        out.finite = true;
        return out;
    }
    std::vector<std::uint32_t> bound(n, 0);  // exclusive bound from pure powers
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& m : basis.leading()) {
            if (m[i] == m.degree() && m.degree() > 0 && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
        }
        if (bound[i] == 0) return out;  // infinite
    }
    out.finite = true;
    std::vector<std::uint32_t> e(n, 0);
    auto blocked = [&](const std::vector<std::uint32_t>& exps) {
        Monomial m(exps);
        return std::any_of(basis.leading().begin(), basis.leading().end(),
                           [&](const Monomial& l) { return l.divides(m); });
    };
    // Depth-first over exponent vectors; once a prefix (with zero suffix) is
    // in the leading ideal, raising the current exponent further stays in it.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (out.members.size() >= limit) throw ComputationError("standard monomial enumeration exceeded limit");
            out.members.emplace_back(e);
            return;
        }
        for (std::uint32_t k = 0; k < bound[i]; ++k) {
            e[i] = k;
            if (blocked(e)) break;
            self(self, i + 1);
        }
        e[i] = 0;
    };
    if (n == 0) {
        out.members.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    rec(rec, 0);
    return out;
}

namespace detail {

inline std::vector<Polynomial> combined_gens(const RingSpec& ring, std::span<const Polynomial> ideal_gens) {
    std::vector<Polynomial> gens;
    for (const auto& q : ring.quotient_gens) gens.push_back(q.with_order(ring.order));
    for (const auto& f : ideal_gens) {
        if (f.arity() != ring.arity()) throw ArityMismatch("ideal generator arity differs from the ring");
        gens.push_back(f.with_order(ring.order));
    }
    return gens;
}

}  // namespace detail

/// k-dimension of P / (quotient_gens + ideal_gens); nullopt when infinite.
inline std::optional<std::uint64_t> quotient_length(const RingSpec& ring, std::span<const Polynomial> ideal_gens) {
    if (!ring.is_polynomial()) throw Error("quotient_length needs a polynomial-mode ring");
    auto gens = detail::combined_gens(ring, ideal_gens);
    GroebnerBasis gb = buchberger(gens, ring.order);
    if (ring.arity() == 0) return gb.contains_unit() ? 0 : 1;
    auto sm = standard_monomials(gb);
    if (!sm.finite) return std::nullopt;
    return sm.size();
}

inline std::optional<std::uint64_t> quotient_length(const RingSpec& ring, const std::vector<Polynomial>& ideal_gens) {
    return quotient_length(ring, std::span<const Polynomial>(ideal_gens));
}

/// True iff every variable is nilpotent modulo quotient_gens + ideal_gens,
/// i.e. the finite-length quotient is supported only at the origin, so its
/// global colength equals the colength in the local ring at the origin.
inline bool is_origin_supported(const RingSpec& ring, std::span<const Polynomial> ideal_gens) {
    if (!ring.is_polynomial()) throw Error("is_origin_supported needs a polynomial-mode ring");
    auto gens = detail::combined_gens(ring, ideal_gens);
    GroebnerBasis gb = buchberger(gens, ring.order);
    if (gb.contains_unit()) return false;  // empty support
    auto sm = standard_monomials(gb);
    if (!sm.finite) throw NotPrimary("is_origin_supported: quotient has infinite length");
    std::uint64_t length = sm.size();
    for (std::size_t i = 0; i < ring.arity(); ++i) {
        Polynomial x = ring.var(i);
        Polynomial p = normal_form(x, gb);
        bool nilpotent = p.is_zero();
        for (std::uint64_t k = 2; k <= length && !nilpotent; ++k) {
            p = normal_form(p * x, gb);
            nilpotent = p.is_zero();
        }
        if (!nilpotent) return false;
    }
    return true;
}

inline bool is_origin_supported(const RingSpec& ring, const std::vector<Polynomial>& ideal_gens) {
    return is_origin_supported(ring, std::span<const Polynomial>(ideal_gens));
}

}  // namespace hilbsg
