#pragma once

/**
 * @file hilbert.hpp
 * @brief Hilbert-Samuel length sequences, exact extraction of the Hilbert
 *        coefficients, and the invariant report built from them.
 *
 * Sign convention, used everywhere:
 *
 *     l(R / I^{n+1}) = sum_{i=0}^{d} (-1)^i e_i C(n + d - i, d - i)   for n >> 0.
 *
 * Derived quantities:
 *   sg(I)  = l(R/I) - e_0(I) + e_1(I)          sectional genus
 *   I(q)   = l(R/q) - e_0(q)
 *   ir(q)  = l((q : m) / q) = l(R/q) - l(R/(q : m))
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "hilbsg/errors.hpp"
#include "hilbsg/groebner.hpp"
#include "hilbsg/idealops.hpp"
#include "hilbsg/polyring.hpp"
#include "hilbsg/semigroup.hpp"

namespace hilbsg {

enum class Backend { polynomial, semigroup };

struct LengthSequence {
    std::size_t dim = 0;
    std::vector<std::int64_t> values;  // values[n] = l(R / I^{n+1})
    Backend backend = Backend::polynomial;
};

struct HilbertData {
    std::vector<std::int64_t> e;  // e_0 .. e_d
    std::size_t n0 = 0;           // first n from which the polynomial matches

    std::int64_t coeff(std::size_t i) const { return i < e.size() ? e[i] : 0; }
};

struct HilbertOptions {
    std::size_t window = 2;  // matches required beyond the interpolation points
    bool parallel = true;    // compute polynomial-mode lengths concurrently
    IdealOptions ideal;
};

/// C(n, k) for small arguments; 0 when k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r.get_si();
}

/// Value of the Hilbert-Samuel polynomial with coefficients `e` at n.
inline std::int64_t hilbert_polynomial(const std::vector<std::int64_t>& e, std::int64_t n) {
    const auto d = static_cast<std::int64_t>(e.size()) - 1;
    std::int64_t v = 0;
    for (std::int64_t i = 0; i <= d; ++i) {
        std::int64_t term = e[i] * binomial(n + d - i, d - i);
        v += (i % 2 == 0) ? term : -term;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Length sequences
// ---------------------------------------------------------------------------

/// l(R / I^{n+1}) for n = 0..nmax in a polynomial quotient ring. The ideal
/// must have finite colength with support at the origin.
inline LengthSequence hs_sequence(const Ideal& ideal, std::size_t dim, std::size_t nmax,
                                  const HilbertOptions& opts = {}) {
    const RingSpec& ring = ideal.ring();
    if (!quotient_length(ring, ideal.gens()))
        throw NotPrimary("ideal has infinite colength; it is not primary to the maximal ideal");
    if (!is_origin_supported(ring, ideal.gens()))
        throw NotPrimary("ideal quotient is not supported only at the origin; local and global lengths differ");

    std::vector<Ideal> powers{ideal};
    for (std::size_t n = 1; n <= nmax; ++n)
        powers.push_back(ideal_combine(CombineKind::product, powers.back(), ideal, opts.ideal));

    auto length_of = [&ring](const Ideal& p) -> std::int64_t {
        auto len = quotient_length(ring, p.gens());
        if (!len) throw NotPrimary("a power of the ideal has infinite colength");
        return static_cast<std::int64_t>(*len);
    };

    LengthSequence seq{dim, {}, Backend::polynomial};
    if (opts.parallel) {
        std::vector<std::future<std::int64_t>> jobs;
        for (const auto& p : powers) jobs.push_back(std::async(std::launch::async, length_of, std::cref(p)));
        for (auto& j : jobs) seq.values.push_back(j.get());
    } else {
        for (const auto& p : powers) seq.values.push_back(length_of(p));
    }
    return seq;
}

/// l(k[S] / I^{n+1}) for n = 0..nmax; the dimension is that of the lattice.
inline LengthSequence hs_sequence(const SemigroupIdeal& ideal, std::size_t nmax) {
    LengthSequence seq{ideal.semigroup().dim(), {}, Backend::semigroup};
    try {
        SemigroupIdeal power = ideal;
        for (std::size_t n = 0; n <= nmax; ++n) {
            if (n > 0) power = sg_ideal_combine(SgCombineKind::product, power, ideal);
            seq.values.push_back(static_cast<std::int64_t>(sg_length(power)));
        }
    } catch (const NotCofinite& e) {
        throw NotPrimary(std::string("semigroup ideal is not primary to the maximal ideal: ") + e.what());
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Fitting
// ---------------------------------------------------------------------------

/// Recovers e_0..e_d by exact interpolation through the last d + 1 values.
///
/// Throws NotStabilized when fewer than `window` earlier values confirm the
/// polynomial, and DegreeMismatch when the sequence grows faster than degree
/// d or the multiplicity comes out nonpositive.
inline HilbertData fit_hilbert(const LengthSequence& seq, std::size_t window = 2) {
    const std::size_t d = seq.dim;
    const std::size_t count = seq.values.size();
    if (count < d + 1 + window)
        throw NotStabilized("need at least " + std::to_string(d + 1 + window) + " length values for dimension " +
                            std::to_string(d) + "; raise nmax");

    // Rows n = N-d .. N, unknowns e_0..e_d.
    const std::size_t N = count - 1;
    const std::size_t m = d + 1;
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
    for (std::size_t r = 0; r < m; ++r) {
        auto n = static_cast<std::int64_t>(N - d + r);
        for (std::size_t i = 0; i <= d; ++i) {
            std::int64_t b = binomial(n + static_cast<std::int64_t>(d - i), static_cast<std::int64_t>(d - i));
            a[r][i] = (i % 2 == 0) ? b : -b;
        }
        a[r][m] = static_cast<long>(seq.values[N - d + r]);
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw std::logic_error("fit_hilbert: singular interpolation matrix");
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    HilbertData out;
    for (std::size_t i = 0; i < m; ++i) {
        mpq_class v = a[i][m] / a[i][i];
        if (v.get_den() != 1) throw DegreeMismatch("non-integral Hilbert coefficient; the length data is inconsistent");
        out.e.push_back(v.get_num().get_si());
    }

    std::size_t n0 = count;
    while (n0 > 0 && hilbert_polynomial(out.e, static_cast<std::int64_t>(n0 - 1)) == seq.values[n0 - 1]) --n0;
    out.n0 = n0;

    const std::size_t confirmed = (N - d >= n0) ? N - d - n0 : 0;
    if (confirmed < window) {
        // Growth faster than degree d shows up as nonzero (d+1)-th
        // differences all the way to the end of the data.
        std::vector<std::int64_t> diff(seq.values.begin(), seq.values.end());
        for (std::size_t k = 0; k <= d; ++k) {
            for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
            diff.pop_back();
        }
        bool growing = diff.size() >= window &&
                       std::all_of(diff.end() - static_cast<std::ptrdiff_t>(window), diff.end(),
                                   [](std::int64_t x) { return x != 0; });
        if (growing)
            throw DegreeMismatch("length sequence grows faster than degree " + std::to_string(d) +
                                 "; the declared dimension is too small");
        throw NotStabilized("Hilbert polynomial confirmed on only " + std::to_string(confirmed) +
                            " extra values (need " + std::to_string(window) + "); raise nmax");
    }
    if (out.e.front() < 1)
        throw DegreeMismatch("multiplicity e_0 = " + std::to_string(out.e.front()) +
                             " is not positive; the declared dimension is too large");
    return out;
}

// ---------------------------------------------------------------------------
// Invariant report
// ---------------------------------------------------------------------------

enum class TypeSource { none, user, derived };

struct InvariantReport {
    std::size_t dim = 0;
    LengthSequence lengths_q;
    LengthSequence lengths_colon;
    HilbertData e_q;
    HilbertData e_colon;
    std::int64_t length_q = 0;
    std::int64_t length_colon = 0;
    std::int64_t sg_q = 0;
    std::int64_t sg_colon = 0;
    std::int64_t I_q = 0;
    std::int64_t ir = 0;
    std::optional<std::int64_t> r;
    TypeSource r_source = TypeSource::none;
    bool origin_supported = false;
    bool e0_agreement = false;
};

namespace detail {

inline InvariantReport assemble(std::size_t dim, LengthSequence seq_q, LengthSequence seq_colon,
                                std::optional<std::int64_t> r, std::size_t window) {
    InvariantReport rep;
    rep.dim = dim;
    rep.e_q = fit_hilbert(seq_q, window);
    rep.e_colon = fit_hilbert(seq_colon, window);
    rep.length_q = seq_q.values.front();
    rep.length_colon = seq_colon.values.front();
    rep.sg_q = rep.length_q - rep.e_q.coeff(0) + rep.e_q.coeff(1);
    rep.sg_colon = rep.length_colon - rep.e_colon.coeff(0) + rep.e_colon.coeff(1);
    rep.I_q = rep.length_q - rep.e_q.coeff(0);
    rep.ir = rep.length_q - rep.length_colon;
    rep.r = r;
    rep.r_source = r ? TypeSource::user : TypeSource::none;
    rep.origin_supported = true;
    rep.e0_agreement = rep.e_q.coeff(0) == rep.e_colon.coeff(0);
    rep.lengths_q = std::move(seq_q);
    rep.lengths_colon = std::move(seq_colon);
    return rep;
}

}  // namespace detail

/// Report for a parameter ideal q of a polynomial quotient ring. The
/// dimension is the number of generators of q.
inline InvariantReport build_report(const Ideal& q, std::size_t nmax, std::optional<std::int64_t> r = std::nullopt,
                                    const HilbertOptions& opts = {}) {
    const std::size_t dim = q.size();
    auto seq_q = hs_sequence(q, dim, nmax, opts);
    Ideal colon = ideal_colon(q, Ideal::maximal(q.ring()));
    if (colon.is_unit())
        throw DegenerateColon("q : m is the unit ideal, so q is the maximal ideal; choose a parameter ideal properly inside m");
    auto seq_colon = hs_sequence(colon, dim, nmax, opts);
    return detail::assemble(dim, std::move(seq_q), std::move(seq_colon), r, opts.window);
}

/// Report for a parameter ideal of an affine semigroup ring; q must have as
/// many generators as the lattice has dimensions.
inline InvariantReport build_report(const SemigroupIdeal& q, std::size_t nmax,
                                    std::optional<std::int64_t> r = std::nullopt, const HilbertOptions& opts = {}) {
    const std::size_t dim = q.semigroup().dim();
    if (q.size() != dim)
        throw Error("parameter ideal has " + std::to_string(q.size()) + " generators but the ring has dimension " +
                    std::to_string(dim));
    auto seq_q = hs_sequence(q, nmax);
    SgColonResult colon = sg_colon_max(q);
    if (colon.ideal.contains(LatticePoint(dim, 0)))
        throw DegenerateColon("q : m is the unit ideal, so q is the maximal ideal; choose a parameter ideal properly inside m");
    auto seq_colon = hs_sequence(colon.ideal, nmax);
    return detail::assemble(dim, std::move(seq_q), std::move(seq_colon), r, opts.window);
}

// ---------------------------------------------------------------------------
// Local cohomology lengths in dimension 2
// ---------------------------------------------------------------------------

/// h_i = length of H^i_m(R), r_i = length of its socle, inferred from a
/// dimension-2 report under the generalized Cohen-Macaulay formulas
///   e_1(q) = -h_1, e_2(q) = h_0,
///   e_1(q:m) = r_1 + r_2 - h_1, e_2(q:m) = h_0 - r_1,
///   ir = r_0 + 2 r_1 + r_2.
struct CohomologyEstimate {
    std::int64_t h0 = 0, h1 = 0, r0 = 0, r1 = 0, r2 = 0;
    bool valid = false;  // false when the values violate 0 <= r_i <= h_i, r_2 >= 1
};

inline CohomologyEstimate infer_cohomology_dim2(const InvariantReport& rep) {
    if (rep.dim != 2) throw NotDim2("cohomology inference needs a dimension-2 report, got " + std::to_string(rep.dim));
    CohomologyEstimate c;
    c.h1 = -rep.e_q.coeff(1);
    c.h0 = rep.e_q.coeff(2);
    c.r1 = c.h0 - rep.e_colon.coeff(2);
    c.r2 = rep.e_colon.coeff(1) + c.h1 - c.r1;
    c.r0 = rep.ir - 2 * c.r1 - c.r2;
    c.valid = c.h0 >= 0 && c.h1 >= 0 && c.r0 >= 0 && c.r1 >= 0 && c.r2 >= 1 && c.r0 <= c.h0 && c.r1 <= c.h1;
    return c;
}

}  // namespace hilbsg
