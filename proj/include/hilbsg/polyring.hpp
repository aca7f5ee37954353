#pragma once

/**
 * @file polyring.hpp
 * @brief Exact multivariate polynomials over Q, monomial orders, and the
 *        polynomial expression grammar.
 *
 * Terms are kept sorted in descending order under the polynomial's monomial
 * order, so the leading term is the first one. Coefficients are GMP rationals;
 * no stored coefficient is ever zero.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilbsg/errors.hpp"

namespace hilbsg {

using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}

    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1) {
        std::vector<std::uint32_t> e(arity, 0);
        e.at(index) = power;
        return Monomial(std::move(e));
    }

    std::size_t arity() const noexcept { return exps_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    /// True when *this divides `other`.
    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    Monomial lcm(const Monomial& other) const {
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
        return Monomial(std::move(e));
    }

    /// *this / divisor; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const {
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - divisor.exps_[i];
        return Monomial(std::move(e));
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::vector<std::uint32_t> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

// ---------------------------------------------------------------------------
// Monomial orders
// ---------------------------------------------------------------------------

class MonomialOrder {
public:
    enum class Kind { lex, degrevlex, elimination };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
    /// Product order: degrevlex on the first `block` variables, then degrevlex
    /// on the rest. Any monomial involving a block variable beats every
    /// monomial that involves none.
    static MonomialOrder elimination(std::size_t block) {
        if (block == 0) throw Error("elimination order needs a block of at least one variable");
        return MonomialOrder(Kind::elimination, block);
    }

    MonomialOrder() = default;

    Kind kind() const noexcept { return kind_; }
    std::size_t block() const noexcept { return block_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.arity() != b.arity())
            throw ArityMismatch("cannot compare monomials of arity " + std::to_string(a.arity()) + " and " +
                                std::to_string(b.arity()));
        switch (kind_) {
            case Kind::lex:
                for (std::size_t i = 0; i < a.arity(); ++i)
                    if (a[i] != b[i]) return a[i] <=> b[i];
                return std::strong_ordering::equal;
            case Kind::degrevlex:
                return grevlex_range(a, b, 0, a.arity());
            case Kind::elimination: {
                if (block_ >= a.arity())
                    throw ArityMismatch("elimination block must be smaller than the number of variables");
                auto head = grevlex_range(a, b, 0, block_);
                if (head != std::strong_ordering::equal) return head;
                return grevlex_range(a, b, block_, a.arity());
            }
        }
        return std::strong_ordering::equal;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::degrevlex: return "degrevlex";
            case Kind::elimination: return "elimination(" + std::to_string(block_) + ")";
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}

    static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da <=> db;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }

    Kind kind_ = Kind::degrevlex;
    std::size_t block_ = 0;
};

inline std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return order.compare(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

struct Term {
    Monomial mono;
    Rational coeff;
};

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::size_t arity, MonomialOrder order) : arity_(arity), order_(order) {}

    /// Builds a normalized polynomial from arbitrary terms: like terms are
    /// collected, zeros dropped, and the result sorted under `order`.
    static Polynomial from_terms(std::size_t arity, MonomialOrder order, std::vector<Term> terms) {
        Polynomial p(arity, order);
        for (const auto& t : terms)
            if (t.mono.arity() != arity) throw ArityMismatch("term arity differs from polynomial arity");
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff == 0) p.terms_.pop_back();
            } else if (t.coeff != 0) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static Polynomial constant(std::size_t arity, MonomialOrder order, const Rational& c) {
        Polynomial p(arity, order);
        if (c != 0) p.terms_.push_back({Monomial(arity), c});
        return p;
    }

    static Polynomial monomial(const Monomial& m, const Rational& c, MonomialOrder order) {
        Polynomial p(m.arity(), order);
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    static Polynomial variable(std::size_t arity, std::size_t index, MonomialOrder order) {
        return monomial(Monomial::variable(arity, index), 1, order);
    }

    std::size_t arity() const noexcept { return arity_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.size() == 1 && terms_.front().mono.is_one(); }

    const Term& leading() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    /// Same polynomial with terms re-sorted under another order.
    Polynomial with_order(const MonomialOrder& order) const {
        if (order == order_) return *this;
        Polynomial p(arity_, order);
        p.terms_ = terms_;
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
        return p;
    }

    Polynomial monic() const {
        if (is_zero() || leading_coeff() == 1) return *this;
        Polynomial p = *this;
        Rational inv = 1 / leading_coeff();
        for (auto& t : p.terms_) t.coeff *= inv;
        return p;
    }

    /// c * m * (*this)
    Polynomial scaled(const Rational& c, const Monomial& m) const {
        Polynomial p(arity_, order_);
        if (c == 0) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
        return p;  // multiplication by a monomial preserves the order
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return merge(f, g, false); }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return merge(f, g, true); }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        check_arity(f, g);
        std::vector<Term> out;
        out.reserve(f.size() * g.size());
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
        return from_terms(f.arity_, f.order_, std::move(out));
    }

    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    Polynomial pow(std::uint32_t k) const {
        Polynomial result = constant(arity_, order_, 1);
        for (std::uint32_t i = 0; i < k; ++i) result *= *this;
        return result;
    }

    /// Equality as elements of Q[x]; the stored order does not matter.
    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        if (f.arity_ != g.arity_ || f.size() != g.size()) return false;
        if (!(g.order_ == f.order_)) return f == g.with_order(f.order_);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coeff != g.terms_[i].coeff) return false;
        return true;
    }

    /// Total order on polynomials, used only for deterministic deduplication.
    friend bool structurally_less(const Polynomial& f, const Polynomial& g) {
        std::size_t n = std::min(f.size(), g.size());
        for (std::size_t i = 0; i < n; ++i) {
            auto c = f.order_.compare(f.terms_[i].mono, g.terms_[i].mono);
            if (c != 0) return c < 0;
            if (f.terms_[i].coeff != g.terms_[i].coeff) return f.terms_[i].coeff < g.terms_[i].coeff;
        }
        return f.size() < g.size();
    }

private:
    static void check_arity(const Polynomial& f, const Polynomial& g) {
        if (f.arity_ != g.arity_)
            throw ArityMismatch("polynomial arity mismatch: " + std::to_string(f.arity_) + " vs " +
                                std::to_string(g.arity_));
    }

    static Polynomial merge(const Polynomial& f, const Polynomial& g0, bool subtract) {
        check_arity(f, g0);
        const Polynomial g = g0.with_order(f.order_);
        Polynomial out(f.arity_, f.order_);
        out.terms_.reserve(f.size() + g.size());
        std::size_t i = 0, j = 0;
        while (i < f.size() || j < g.size()) {
            if (j == g.size()) {
                out.terms_.push_back(f.terms_[i++]);
                continue;
            }
            if (i == f.size()) {
                Term t = g.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                out.terms_.push_back(std::move(t));
                continue;
            }
            auto c = f.order_.compare(f.terms_[i].mono, g.terms_[j].mono);
            if (c > 0) {
                out.terms_.push_back(f.terms_[i++]);
            } else if (c < 0) {
                Term t = g.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                out.terms_.push_back(std::move(t));
            } else {
                Rational s = f.terms_[i].coeff;
                if (subtract)
                    s -= g.terms_[j].coeff;
                else
                    s += g.terms_[j].coeff;
                if (s != 0) out.terms_.push_back({f.terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::size_t arity_ = 0;
    MonomialOrder order_ = MonomialOrder::degrevlex();
    std::vector<Term> terms_;
};

enum class ArithKind { add, sub, mul };

inline Polynomial poly_arith(ArithKind kind, const Polynomial& f, const Polynomial& g) {
    switch (kind) {
        case ArithKind::add: return f + g;
        case ArithKind::sub: return f - g;
        case ArithKind::mul: return f * g;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Ring declaration
// ---------------------------------------------------------------------------

using LatticePoint = std::vector<std::int64_t>;

struct RingSpec {
    enum class Mode { polynomial, semigroup };

    Mode mode = Mode::polynomial;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> quotient_gens;
    std::size_t sg_dim = 0;
    std::vector<LatticePoint> sg_gens;

    static RingSpec polynomial(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex(),
                               std::vector<Polynomial> quotient = {}) {
        RingSpec r;
        r.mode = Mode::polynomial;
        r.vars = std::move(vars);
        r.order = order;
        for (auto& q : quotient) {
            if (q.arity() != r.vars.size()) throw ArityMismatch("quotient generator arity differs from variable count");
            r.quotient_gens.push_back(q.with_order(order));
        }
        return r;
    }

    static RingSpec semigroup(std::size_t dim, std::vector<LatticePoint> gens) {
        RingSpec r;
        r.mode = Mode::semigroup;
        r.sg_dim = dim;
        for (const auto& g : gens) {
            if (g.size() != dim) throw ArityMismatch("semigroup generator has the wrong dimension");
            if (std::any_of(g.begin(), g.end(), [](auto x) { return x < 0; }))
                throw Error("semigroup generators must have nonnegative coordinates");
            if (std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; }))
                throw Error("semigroup generators must be nonzero");
        }
        r.sg_gens = std::move(gens);
        return r;
    }

    std::size_t arity() const noexcept { return vars.size(); }
    bool is_polynomial() const noexcept { return mode == Mode::polynomial; }

    Polynomial zero() const { return Polynomial(arity(), order); }
    Polynomial one() const { return Polynomial::constant(arity(), order, 1); }
    Polynomial var(std::size_t i) const { return Polynomial::variable(arity(), i, order); }

    std::optional<std::size_t> var_index(std::string_view name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.mode == b.mode && a.vars == b.vars && a.order == b.order && a.quotient_gens == b.quotient_gens &&
               a.sg_dim == b.sg_dim && a.sg_gens == b.sg_gens;
    }
};

// ---------------------------------------------------------------------------
// Printing and parsing
// ---------------------------------------------------------------------------

/// Renders `f` in the input grammar, e.g. "2*x^2*y - 3*y". Non-integral
/// coefficients print as "p/q".
inline std::string to_string(const Polynomial& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        bool wrote = false;
        if (c != 1 || t.mono.is_one()) {
            out << c.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < t.mono.arity(); ++i) {
            if (t.mono[i] == 0) continue;
            if (wrote) out << "*";
            out << (i < vars.size() ? vars[i] : "x" + std::to_string(i));
            if (t.mono[i] > 1) out << "^" << t.mono[i];
            wrote = true;
        }
    }
    return out.str();
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view src, const RingSpec& ring) : ring_(ring) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(src[i]))) continue;
            text_.push_back(src[i]);
            column_.push_back(i + 1);
        }
    }

    Polynomial parse() {
        if (text_.empty()) fail("empty polynomial expression");
        std::vector<Term> terms;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            fail("expression cannot start with '+'");
        }
        terms.push_back(term(negate));
        while (pos_ < text_.size()) {
            char c = peek();
            if (c != '+' && c != '-') fail_unknown_or(std::string("expected '+' or '-', found '") + c + "'");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return Polynomial::from_terms(ring_.arity(), ring_.order, std::move(terms));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        std::size_t col = pos_ < column_.size() ? column_[pos_] : (column_.empty() ? 1 : column_.back() + 1);
        throw ParseError(what, 0, col);
    }

    std::string digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(text_[pos_++]);
        return s;
    }

    Term term(bool negate) {
        Rational coeff = 1;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(digits());
            mpz_class den = 1;
            if (peek() == '/') {
                ++pos_;
                std::string d = digits();
                if (d.empty()) fail("expected denominator after '/'");
                den = mpz_class(d);
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            any = true;
        }
        std::vector<std::uint32_t> exps(ring_.arity(), 0);
        while (true) {
            std::size_t save = pos_;
            bool star = false;
            if (peek() == '*') {
                ++pos_;
                star = true;
            }
            if (!factor_start()) {
                if (star) fail_unknown_or("expected a variable after '*'");
                pos_ = save;
                break;
            }
            auto [index, power] = factor();
            exps[index] += power;
            any = true;
        }
        if (!any) fail_unknown_or("expected a term");
        if (negate) coeff = -coeff;
        return {Monomial(std::move(exps)), coeff};
    }

    [[noreturn]] void fail_unknown_or(const std::string& what) const {
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::string name;
            for (std::size_t i = pos_; i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_'); ++i)
                name.push_back(text_[i]);
            fail("unknown variable '" + name + "'");
        }
        fail(what);
    }

    bool factor_start() const { return pos_ < text_.size() && !match_var().empty(); }

    std::string_view match_var() const {
        std::string_view rest(text_.data() + pos_, text_.size() - pos_);
        std::string_view best;
        for (const auto& v : ring_.vars)
            if (v.size() > best.size() && rest.substr(0, v.size()) == v) best = std::string_view(v);
        return best;
    }

    std::pair<std::size_t, std::uint32_t> factor() {
        std::string_view name = match_var();
        std::size_t index = *ring_.var_index(name);
        pos_ += name.size();
        std::uint32_t power = 1;
        if (peek() == '^') {
            ++pos_;
            std::string d = digits();
            if (d.empty()) fail("expected a natural exponent after '^'");
            if (d.size() > 9) fail("exponent too large");
            power = static_cast<std::uint32_t>(std::stoul(d));
        }
        return {index, power};
    }

    const RingSpec& ring_;
    std::string text_;
    std::vector<std::size_t> column_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `src` under the grammar
///   expression := term (('+'|'-') term)*
///   term       := [integer] ('*'? factor)*
///   factor     := varname ('^' natural)?
/// Whitespace is ignored; variable names match greedily against the declared
/// names. As an extension the coefficient may be written "p/q" so that
/// printed rational polynomials parse back.
inline Polynomial parse_polynomial(std::string_view src, const RingSpec& ring) {
    if (!ring.is_polynomial()) throw Error("parse_polynomial needs a polynomial-mode ring");
    return detail::PolyParser(src, ring).parse();
}

}  // namespace hilbsg
