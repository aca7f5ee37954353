#pragma once

// Evaluation of the sectional-genus characterization inequalities on an
// InvariantReport. A ring-theoretic conclusion is drawn only when the caller
// has asserted every hypothesis the corresponding statement needs; otherwise
// the raw inequality values are recorded with a "no conclusion" note.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbsg/errors.hpp"
#include "hilbsg/hilbert.hpp"

namespace hilbsg {

enum class CheckId { SG_CHAIN, E2_CHAIN, GORENSTEIN, QUASI_BUCHSBAUM, LEMMA31, GOTO_NISHIDA };

enum class Assumption { unmixed, non_regular, c_parameter, deep_in_g_power };

using Assertions = std::set<Assumption>;

inline std::string to_string(CheckId id) {
    switch (id) {
        case CheckId::SG_CHAIN: return "SG_CHAIN";
        case CheckId::E2_CHAIN: return "E2_CHAIN";
        case CheckId::GORENSTEIN: return "GORENSTEIN";
        case CheckId::QUASI_BUCHSBAUM: return "QUASI_BUCHSBAUM";
        case CheckId::LEMMA31: return "LEMMA31";
        case CheckId::GOTO_NISHIDA: return "GOTO_NISHIDA";
    }
    return "?";
}

inline std::string to_string(Assumption a) {
    switch (a) {
        case Assumption::unmixed: return "unmixed";
        case Assumption::non_regular: return "non_regular";
        case Assumption::c_parameter: return "c_parameter";
        case Assumption::deep_in_g_power: return "deep_in_g_power";
    }
    return "?";
}

inline std::optional<Assumption> assumption_from_string(const std::string& s) {
    for (auto a : {Assumption::unmixed, Assumption::non_regular, Assumption::c_parameter, Assumption::deep_in_g_power})
        if (to_string(a) == s) return a;
    return std::nullopt;
}

enum class Relation { le, eq, ge };

/// One comparison `lhs REL rhs` inside a chain.
struct Link {
    std::string lhs_label;
    std::string rhs_label;
    Relation relation = Relation::le;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    bool equality = false;
    bool auxiliary = false;

    std::string text() const {
        const char* op = relation == Relation::le ? " <= " : relation == Relation::ge ? " >= " : " = ";
        return lhs_label + op + rhs_label;
    }
};

inline Link make_link(std::string lhs_label, std::int64_t lhs, Relation rel, std::string rhs_label, std::int64_t rhs,
                      bool auxiliary = false) {
    Link l{std::move(lhs_label), std::move(rhs_label), rel, lhs, rhs, false, lhs == rhs, auxiliary};
    switch (rel) {
        case Relation::le: l.holds = lhs <= rhs; break;
        case Relation::eq: l.holds = lhs == rhs; break;
        case Relation::ge: l.holds = lhs >= rhs; break;
    }
    return l;
}

struct VerdictRecord {
    CheckId check = CheckId::SG_CHAIN;
    std::vector<Link> links;
    std::optional<std::string> conclusion;
    std::string note;
    std::vector<Assumption> required;
    std::vector<Assumption> asserted;

    bool all_hold() const {
        return std::all_of(links.begin(), links.end(), [](const Link& l) { return l.holds; });
    }
    bool any_equality() const {
        return std::any_of(links.begin(), links.end(), [](const Link& l) { return l.equality; });
    }
};

namespace detail {

inline const Assertions& full_hypotheses() {
    static const Assertions all{Assumption::unmixed, Assumption::non_regular, Assumption::c_parameter,
                                Assumption::deep_in_g_power};
    return all;
}

inline VerdictRecord start_record(CheckId id, const Assertions& required, const Assertions& asserted) {
    VerdictRecord rec;
    rec.check = id;
    rec.required.assign(required.begin(), required.end());
    rec.asserted.assign(asserted.begin(), asserted.end());
    return rec;
}

/// Names of required assumptions that were not asserted, or "" if none.
inline std::string missing(const Assertions& required, const Assertions& asserted) {
    std::string out;
    for (auto a : required)
        if (!asserted.contains(a)) out += (out.empty() ? "" : ", ") + to_string(a);
    return out;
}

/// Common tail for the Cohen-Macaulay style checks: hypotheses gate the
/// conclusion, a violated link means the hypotheses cannot hold.
inline void conclude(VerdictRecord& rec, const Assertions& required, const Assertions& asserted, std::size_t dim,
                     const std::string& positive, const std::string& negative, bool positive_case) {
    if (dim < 2) {
        rec.note = "no conclusion: the characterization needs dimension at least 2";
        return;
    }
    std::string gap = missing(required, asserted);
    if (!gap.empty()) {
        rec.note = "no conclusion: " + gap + " not asserted";
        if (!rec.all_hold()) rec.note += "; chain violated";
        return;
    }
    if (!rec.all_hold()) {
        rec.conclusion = "hypotheses not satisfied (ring not unmixed or q not a C-parameter ideal)";
        rec.note = "chain violated";
        return;
    }
    rec.conclusion = positive_case ? positive : negative;
}

inline std::int64_t require_type(const InvariantReport& rep, CheckId id) {
    if (!rep.r) throw MissingType(to_string(id) + " needs the Cohen-Macaulay type r (give 'type r = N')");
    return *rep.r;
}

}  // namespace detail

/// r - ir <= sg(q:m) <= sg(q); either equality characterizes Cohen-Macaulay.
inline VerdictRecord check_sg_chain(const InvariantReport& rep, const Assertions& asserted = {}) {
    const std::int64_t r = detail::require_type(rep, CheckId::SG_CHAIN);
    const auto& required = detail::full_hypotheses();
    auto rec = detail::start_record(CheckId::SG_CHAIN, required, asserted);
    rec.links.push_back(make_link("r - ir", r - rep.ir, Relation::le, "sg(q:m)", rep.sg_colon));
    rec.links.push_back(make_link("sg(q:m)", rep.sg_colon, Relation::le, "sg(q)", rep.sg_q));
    detail::conclude(rec, required, asserted, rep.dim, "Cohen-Macaulay", "not Cohen-Macaulay", rec.any_equality());
    return rec;
}

/// e_2(q:m) <= e_2(q) <= sg(q:m) + ir - r, plus the auxiliary link
/// e_2(q:m) <= sg(q). Any equality characterizes Cohen-Macaulay.
inline VerdictRecord check_e2_chain(const InvariantReport& rep, const Assertions& asserted = {}) {
    if (rep.dim < 2) throw Error("E2_CHAIN needs dimension at least 2");
    const std::int64_t r = detail::require_type(rep, CheckId::E2_CHAIN);
    const auto& required = detail::full_hypotheses();
    auto rec = detail::start_record(CheckId::E2_CHAIN, required, asserted);
    const std::int64_t e2_colon = rep.e_colon.coeff(2), e2_q = rep.e_q.coeff(2);
    rec.links.push_back(make_link("e2(q:m)", e2_colon, Relation::le, "e2(q)", e2_q));
    rec.links.push_back(make_link("e2(q)", e2_q, Relation::le, "sg(q:m) + ir - r", rep.sg_colon + rep.ir - r));
    rec.links.push_back(make_link("e2(q:m)", e2_colon, Relation::le, "sg(q)", rep.sg_q, true));
    detail::conclude(rec, required, asserted, rep.dim, "Cohen-Macaulay", "not Cohen-Macaulay", rec.any_equality());
    return rec;
}

/// sg(q:m) <= 1 - ir characterizes Gorenstein.
inline VerdictRecord check_gorenstein(const InvariantReport& rep, const Assertions& asserted = {}) {
    const auto& required = detail::full_hypotheses();
    auto rec = detail::start_record(CheckId::GORENSTEIN, required, asserted);
    rec.links.push_back(make_link("sg(q:m)", rep.sg_colon, Relation::le, "1 - ir", 1 - rep.ir));
    bool holds = rec.links.front().holds;
    // A failing link is the negative answer here, not a hypothesis violation.
    rec.links.front().holds = true;
    detail::conclude(rec, required, asserted, rep.dim, "Gorenstein", "not Gorenstein", holds);
    rec.links.front().holds = holds;
    return rec;
}

/// sg(q:m) = e_1(q) characterizes quasi-Buchsbaum.
inline VerdictRecord check_quasi_buchsbaum(const InvariantReport& rep, const Assertions& asserted = {}) {
    const Assertions required{Assumption::unmixed, Assumption::non_regular, Assumption::c_parameter};
    auto rec = detail::start_record(CheckId::QUASI_BUCHSBAUM, required, asserted);
    rec.links.push_back(make_link("sg(q:m)", rep.sg_colon, Relation::eq, "e1(q)", rep.e_q.coeff(1)));
    bool holds = rec.links.front().holds;
    rec.links.front().holds = true;
    detail::conclude(rec, required, asserted, rep.dim, "quasi-Buchsbaum", "not quasi-Buchsbaum", holds);
    rec.links.front().holds = holds;
    return rec;
}

/// sg(q:m) = I(q) + e_1(q:m) - ir, valid for C-parameter ideals once
/// e_0(q:m) = e_0(q).
inline VerdictRecord check_lemma31(const InvariantReport& rep, const Assertions& asserted = {}) {
    auto rec = detail::start_record(CheckId::LEMMA31, {}, asserted);
    rec.links.push_back(make_link("sg(q:m)", rep.sg_colon, Relation::eq, "I(q) + e1(q:m) - ir",
                                  rep.I_q + rep.e_colon.coeff(1) - rep.ir));
    if (!rep.e0_agreement) {
        rec.note = "skipped: e0(q:m) differs from e0(q)";
        return rec;
    }
    if (rec.all_hold())
        rec.conclusion = "identity holds";
    else
        rec.note = "identity fails: input is not a C-parameter ideal or hypotheses fail";
    return rec;
}

/// sg(q:m) >= e_1(q), valid whenever q is a reduction of q:m.
inline VerdictRecord check_goto_nishida(const InvariantReport& rep, const Assertions& asserted = {}) {
    auto rec = detail::start_record(CheckId::GOTO_NISHIDA, {}, asserted);
    rec.links.push_back(make_link("sg(q:m)", rep.sg_colon, Relation::ge, "e1(q)", rep.e_q.coeff(1)));
    if (!rep.e0_agreement) {
        rec.note = "skipped: e0(q:m) differs from e0(q), q is not a reduction of q:m";
        return rec;
    }
    if (rec.all_hold())
        rec.conclusion = "inequality holds";
    else
        rec.note = "violation: computation defect or invalid input";
    return rec;
}

}  // namespace hilbsg
