#pragma once

// Job files, job orchestration and report serialization (JSON, CSV, text).
//
// Job file format, one directive per line, '#' starts a comment:
//
//   mode polynomial|semigroup          first directive, required
//   vars X Y Z W                       polynomial mode
//   order degrevlex|lex                polynomial mode, default degrevlex
//   quotient: <poly>, <poly>, ...      polynomial mode, optional
//   dim 2                              semigroup mode; optional check in polynomial mode
//   gens: 1 0; 1 2; 2 3; 3 1           semigroup mode
//   ideal q: <poly>, ... | 6 0; 6 12   the parameter ideal
//   nmax 6                             optional, default dim + 6
//   type r = 2                         optional
//   assert unmixed non_regular ...     optional

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hilbsg/errors.hpp"
#include "hilbsg/hilbert.hpp"
#include "hilbsg/idealops.hpp"
#include "hilbsg/polyring.hpp"
#include "hilbsg/semigroup.hpp"
#include "hilbsg/verdict.hpp"

namespace hilbsg {

enum class OutputFormat { json, csv, text };

struct JobSpec {
    RingSpec ring;
    std::vector<Polynomial> ideal_poly;  // polynomial mode
    std::vector<LatticePoint> ideal_sg;  // semigroup mode
    std::size_t nmax = 0;
    std::optional<std::int64_t> r;
    Assertions assertions;
    OutputFormat format = OutputFormat::json;

    bool is_polynomial() const noexcept { return ring.is_polynomial(); }
    std::size_t dim() const noexcept { return is_polynomial() ? ideal_poly.size() : ring.sg_dim; }
};

/// Smallest nmax for which the Hilbert fit can be confirmed with `window`
/// extra values in dimension d.
inline std::size_t min_nmax(std::size_t d, std::size_t window = 2) { return d + window; }

inline std::size_t default_nmax(std::size_t d) { return d + 6; }

namespace detail {

struct Directive {
    std::size_t line = 0;
    std::size_t column = 0;  // 1-based column where `value` starts
    std::string value;
};

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Splits `text` at `sep`, keeping the 1-based column of each piece.
inline std::vector<std::pair<std::size_t, std::string>> split_at(const std::string& text, char sep, std::size_t column) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            out.emplace_back(column + start, text.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::vector<std::pair<std::size_t, std::string>> tokens(const std::string& text, std::size_t column) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        if (j > i) out.emplace_back(column + i, text.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::int64_t parse_int(const std::string& tok, std::size_t line, std::size_t column) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line, column);
    return v;
}

inline std::int64_t parse_natural(const std::string& tok, std::size_t line, std::size_t column, std::int64_t least) {
    std::int64_t v = parse_int(tok, line, column);
    if (v < least) throw ParseError("expected an integer >= " + std::to_string(least) + ", got " + tok, line, column);
    return v;
}

inline std::vector<LatticePoint> parse_vectors(const Directive& d, std::size_t dim) {
    std::vector<LatticePoint> out;
    for (const auto& [col, piece] : split_at(d.value, ';', d.column)) {
        auto toks = tokens(piece, col);
        if (toks.empty()) throw ParseError("empty vector", d.line, col);
        if (toks.size() != dim)
            throw ParseError("vector has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(dim),
                             d.line, toks.front().first);
        LatticePoint v;
        for (const auto& [c, t] : toks) v.push_back(parse_int(t, d.line, c));
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<Polynomial> parse_poly_list(const Directive& d, const RingSpec& ring) {
    std::vector<Polynomial> out;
    for (const auto& [col, piece] : split_at(d.value, ',', d.column)) {
        if (std::all_of(piece.begin(), piece.end(), is_space)) throw ParseError("empty polynomial", d.line, col);
        try {
            out.push_back(parse_polynomial(piece, ring));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), d.line, col + (e.column() ? e.column() - 1 : 0));
        }
    }
    return out;
}

inline bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace detail

/// Parses and validates a job file. Every failure is a ParseError carrying
/// the offending line.
inline JobSpec parse_spec(std::string_view src) {
    using detail::Directive;
    std::map<std::string, Directive> seen;
    std::optional<Directive> mode;
    std::size_t last_line = 0;

    std::istringstream in{std::string(src)};
    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        last_line = lineno;
        std::string text = raw.substr(0, raw.find('#'));
        std::size_t b = 0;
        while (b < text.size() && detail::is_space(text[b])) ++b;
        std::size_t e = text.size();
        while (e > b && detail::is_space(text[e - 1])) --e;
        if (b == e) continue;
        text = text.substr(0, e);

        // Key: "ideal q:", "quotient:", "gens:" or a bare word.
        std::string key;
        std::size_t vstart = 0;
        std::size_t k = b;
        while (k < text.size() && !detail::is_space(text[k]) && text[k] != ':') ++k;
        key = text.substr(b, k - b);
        static const std::vector<std::string> known{"mode", "vars", "order", "quotient", "dim",  "gens",
                                                    "ideal", "nmax", "type",  "assert"};
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError("unknown directive '" + key + "'", lineno, b + 1);
        if (key == "ideal") {
            std::size_t p = k;
            while (p < text.size() && detail::is_space(text[p])) ++p;
            if (text.compare(p, 2, "q:") != 0) throw ParseError("expected 'ideal q:'", lineno, p + 1);
            vstart = p + 2;
        } else if (key == "quotient" || key == "gens") {
            if (k >= text.size() || text[k] != ':') throw ParseError("expected ':' after '" + key + "'", lineno, k + 1);
            vstart = k + 1;
        } else {
            if (k < text.size() && text[k] == ':') throw ParseError("unexpected ':' after '" + key + "'", lineno, k + 1);
            vstart = k;
        }
        while (vstart < text.size() && detail::is_space(text[vstart])) ++vstart;
        Directive d{lineno, vstart + 1, text.substr(vstart)};

        if (!mode && key != "mode") throw ParseError("the first directive must be 'mode polynomial|semigroup'", lineno, b + 1);
        if (seen.contains(key))
            throw ParseError("duplicate directive '" + key + "' (first given on line " + std::to_string(seen[key].line) + ")",
                             lineno, b + 1);
        if (key == "mode") mode = d;
        seen.emplace(key, std::move(d));
    }
    if (!mode) throw ParseError("missing 'mode polynomial|semigroup'", std::max<std::size_t>(last_line, 1), 1);

    auto get = [&](const std::string& key) -> const Directive* {
        auto it = seen.find(key);
        return it == seen.end() ? nullptr : &it->second;
    };
    auto require = [&](const std::string& key) -> const Directive& {
        if (const Directive* d = get(key)) return *d;
        throw ParseError("missing '" + key + "' directive", std::max<std::size_t>(last_line, 1), 1);
    };
    auto single_token = [](const Directive& d) {
        auto toks = detail::tokens(d.value, d.column);
        if (toks.size() != 1) throw ParseError("expected exactly one value", d.line, d.column);
        return toks.front();
    };
    auto forbid = [&](const std::string& key, const std::string& mode_name) {
        if (const Directive* d = get(key))
            throw ParseError("'" + key + "' is not allowed in " + mode_name + " mode", d->line, 1);
    };

    JobSpec job;
    auto [mode_col, mode_name] = single_token(*mode);
    const Directive& ideal_d = require("ideal");

    if (mode_name == "polynomial") {
        forbid("gens", "polynomial");
        const Directive& vars_d = require("vars");
        std::vector<std::string> vars;
        for (const auto& [col, name] : detail::tokens(vars_d.value, vars_d.column)) {
            if (!detail::valid_identifier(name)) throw ParseError("invalid variable name '" + name + "'", vars_d.line, col);
            if (std::find(vars.begin(), vars.end(), name) != vars.end())
                throw ParseError("variable '" + name + "' declared twice", vars_d.line, col);
            vars.push_back(name);
        }
        if (vars.empty()) throw ParseError("'vars' needs at least one variable", vars_d.line, vars_d.column);

        MonomialOrder order = MonomialOrder::degrevlex();
        if (const Directive* od = get("order")) {
            auto [col, name] = single_token(*od);
            if (name == "lex")
                order = MonomialOrder::lex();
            else if (name != "degrevlex")
                throw ParseError("order must be 'degrevlex' or 'lex', got '" + name + "'", od->line, col);
        }
        job.ring = RingSpec::polynomial(vars, order);
        if (const Directive* qd = get("quotient")) job.ring = RingSpec::polynomial(vars, order, detail::parse_poly_list(*qd, job.ring));

        job.ideal_poly = detail::parse_poly_list(ideal_d, job.ring);
        if (const Directive* dd = get("dim")) {
            auto [col, tok] = single_token(*dd);
            auto dim = static_cast<std::size_t>(detail::parse_natural(tok, dd->line, col, 1));
            if (dim != job.ideal_poly.size())
                throw ParseError("parameter ideal has " + std::to_string(job.ideal_poly.size()) +
                                     " generators but dim is " + std::to_string(dim),
                                 ideal_d.line, ideal_d.column);
        }
    } else if (mode_name == "semigroup") {
        forbid("vars", "semigroup");
        forbid("order", "semigroup");
        forbid("quotient", "semigroup");
        const Directive& dd = require("dim");
        auto [col, tok] = single_token(dd);
        auto dim = static_cast<std::size_t>(detail::parse_natural(tok, dd.line, col, 1));
        const Directive& gd = require("gens");
        auto gens = detail::parse_vectors(gd, dim);
        try {
            job.ring = RingSpec::semigroup(dim, gens);
            AffineSemigroup check(dim, gens);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), gd.line, gd.column);
        }
        job.ideal_sg = detail::parse_vectors(ideal_d, dim);
        if (job.ideal_sg.size() != dim)
            throw ParseError("parameter ideal has " + std::to_string(job.ideal_sg.size()) +
                                 " generators but dim is " + std::to_string(dim),
                             ideal_d.line, ideal_d.column);
        try {
            SemigroupIdeal check(AffineSemigroup::from_ring(job.ring), job.ideal_sg);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), ideal_d.line, ideal_d.column);
        }
    } else {
        throw ParseError("mode must be 'polynomial' or 'semigroup', got '" + mode_name + "'", mode->line, mode_col);
    }

    job.nmax = default_nmax(job.dim());
    if (const Directive* nd = get("nmax")) {
        auto [ncol, ntok] = single_token(*nd);
        job.nmax = static_cast<std::size_t>(detail::parse_natural(ntok, nd->line, ncol, 0));
        if (job.nmax < min_nmax(job.dim()))
            throw ParseError("nmax must be at least " + std::to_string(min_nmax(job.dim())) + " for dimension " +
                                 std::to_string(job.dim()),
                             nd->line, ncol);
    }

    if (const Directive* td = get("type")) {
        auto toks = detail::tokens(td->value, td->column);
        if (toks.size() != 3 || toks[0].second != "r" || toks[1].second != "=")
            throw ParseError("expected 'type r = N'", td->line, td->column);
        job.r = detail::parse_natural(toks[2].second, td->line, toks[2].first, 1);
    }
    if (const Directive* ad = get("assert")) {
        for (const auto& [col, name] : detail::tokens(ad->value, ad->column)) {
            auto a = assumption_from_string(name);
            if (!a) throw ParseError("unknown assumption '" + name + "'", ad->line, col);
            job.assertions.insert(*a);
        }
    }
    return job;
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

struct Report {
    JobSpec job;
    InvariantReport invariants;
    std::vector<LatticePoint> socle;  // semigroup mode: socle points of q
    std::optional<CohomologyEstimate> cohomology;
    std::vector<VerdictRecord> verdicts;
    std::vector<std::string> diagnostics;
};

inline Report run(const JobSpec& job, const HilbertOptions& opts = {}) {
    if (job.nmax < min_nmax(job.dim(), opts.window))
        throw NotStabilized("nmax " + std::to_string(job.nmax) + " is below the minimum " +
                            std::to_string(min_nmax(job.dim(), opts.window)) + " for dimension " +
                            std::to_string(job.dim()));
    Report rep{job, {}, {}, {}, {}, {}};
    if (job.is_polynomial()) {
        rep.invariants = build_report(Ideal(job.ring, job.ideal_poly), job.nmax, job.r, opts);
    } else {
        SemigroupIdeal q(AffineSemigroup::from_ring(job.ring), job.ideal_sg);
        rep.invariants = build_report(q, job.nmax, job.r, opts);
        rep.socle = sg_colon_max(q).socle_points;
    }
    InvariantReport& inv = rep.invariants;
    const Assertions& as = job.assertions;

    // Under the full hypotheses sg(q:m) = sg(q) forces Cohen-Macaulay, where
    // the type equals the index of reducibility.
    if (!inv.r && inv.dim >= 2 && detail::missing(detail::full_hypotheses(), as).empty() && inv.sg_colon == inv.sg_q) {
        inv.r = inv.ir;
        inv.r_source = TypeSource::derived;
        rep.diagnostics.push_back("type r not given; set r = ir = " + std::to_string(inv.ir) +
                                  " from sg(q:m) = sg(q) under the asserted hypotheses");
    }

    if (inv.r) {
        rep.verdicts.push_back(check_sg_chain(inv, as));
        if (inv.dim >= 2) rep.verdicts.push_back(check_e2_chain(inv, as));
    } else {
        rep.diagnostics.push_back("SG_CHAIN and E2_CHAIN skipped: type r not given (add 'type r = N')");
    }
    rep.verdicts.push_back(check_gorenstein(inv, as));
    rep.verdicts.push_back(check_quasi_buchsbaum(inv, as));
    rep.verdicts.push_back(check_lemma31(inv, as));
    rep.verdicts.push_back(check_goto_nishida(inv, as));

    for (const auto& v : rep.verdicts) {
        if (v.check == CheckId::LEMMA31 && inv.e0_agreement && !v.all_hold())
            rep.diagnostics.push_back("LEMMA31: identity fails; input is not a C-parameter ideal or hypotheses fail");
        if (v.check == CheckId::GOTO_NISHIDA && inv.e0_agreement && !v.all_hold())
            rep.diagnostics.push_back("GOTO_NISHIDA: inequality violated; computation defect or invalid input");
    }
    if (!inv.e0_agreement)
        rep.diagnostics.push_back("e0(q:m) = " + std::to_string(inv.e_colon.coeff(0)) + " differs from e0(q) = " +
                                  std::to_string(inv.e_q.coeff(0)));

    if (inv.dim == 2) {
        rep.cohomology = infer_cohomology_dim2(inv);
        if (!rep.cohomology->valid)
            rep.diagnostics.push_back("cohomology estimate out of range; the ring is not generalized Cohen-Macaulay "
                                      "of the expected shape or q is not a C-parameter ideal");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson num(std::int64_t v) { return std::to_string(v); }

inline ojson num_list(const std::vector<std::int64_t>& v) {
    ojson a = ojson::array();
    for (auto x : v) a.push_back(num(x));
    return a;
}

inline ojson point_list(const std::vector<LatticePoint>& pts) {
    ojson a = ojson::array();
    for (const auto& p : pts) a.push_back(num_list(p));
    return a;
}

inline ojson poly_list(const std::vector<Polynomial>& ps, const std::vector<std::string>& vars) {
    ojson a = ojson::array();
    for (const auto& p : ps) a.push_back(to_string(p, vars));
    return a;
}

inline ojson hilbert_json(const HilbertData& h) { return ojson{{"e", num_list(h.e)}, {"n0", num(static_cast<std::int64_t>(h.n0))}}; }

inline std::string source_name(TypeSource s) {
    switch (s) {
        case TypeSource::none: return "none";
        case TypeSource::user: return "user";
        case TypeSource::derived: return "derived";
    }
    return "none";
}

inline ojson verdict_json(const VerdictRecord& v) {
    ojson links = ojson::array();
    for (const auto& l : v.links)
        links.push_back(ojson{{"relation", l.text()},
                              {"lhs", num(l.lhs)},
                              {"rhs", num(l.rhs)},
                              {"holds", l.holds},
                              {"equality", l.equality},
                              {"auxiliary", l.auxiliary}});
    ojson req = ojson::array(), asserted = ojson::array();
    for (auto a : v.required) req.push_back(to_string(a));
    for (auto a : v.asserted) asserted.push_back(to_string(a));
    return ojson{{"check", to_string(v.check)},
                 {"links", links},
                 {"conclusion", v.conclusion ? ojson(*v.conclusion) : ojson(nullptr)},
                 {"note", v.note},
                 {"required", req},
                 {"asserted", asserted}};
}

inline void flatten(const ojson& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        if (j.empty()) out.emplace_back(path, "{}");
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array()) {
        if (j.empty()) out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else if (j.is_null()) {
        out.emplace_back(path, "null");
    } else {
        out.emplace_back(path, j.dump());
    }
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json job_json(const JobSpec& job) {
    using detail::ojson;
    ojson j;
    j["mode"] = job.is_polynomial() ? "polynomial" : "semigroup";
    if (job.is_polynomial()) {
        j["vars"] = job.ring.vars;
        j["order"] = job.ring.order.name();
        j["quotient"] = detail::poly_list(job.ring.quotient_gens, job.ring.vars);
        j["ideal"] = detail::poly_list(job.ideal_poly, job.ring.vars);
    } else {
        j["gens"] = detail::point_list(job.ring.sg_gens);
        j["ideal"] = detail::point_list(job.ideal_sg);
    }
    j["dim"] = detail::num(static_cast<std::int64_t>(job.dim()));
    j["nmax"] = detail::num(static_cast<std::int64_t>(job.nmax));
    j["r"] = job.r ? detail::num(*job.r) : ojson(nullptr);
    ojson as = ojson::array();
    for (auto a : job.assertions) as.push_back(to_string(a));
    j["assertions"] = as;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& rep) {
    using detail::num;
    using detail::ojson;
    const InvariantReport& inv = rep.invariants;
    ojson j;
    j["job"] = job_json(rep.job);
    j["lengths_q"] = detail::num_list(inv.lengths_q.values);
    j["lengths_colon"] = detail::num_list(inv.lengths_colon.values);
    j["hilbert_q"] = detail::hilbert_json(inv.e_q);
    j["hilbert_colon"] = detail::hilbert_json(inv.e_colon);
    ojson iv;
    iv["dim"] = num(static_cast<std::int64_t>(inv.dim));
    iv["length_q"] = num(inv.length_q);
    iv["length_colon"] = num(inv.length_colon);
    iv["sg_q"] = num(inv.sg_q);
    iv["sg_colon"] = num(inv.sg_colon);
    iv["I_q"] = num(inv.I_q);
    iv["ir"] = num(inv.ir);
    iv["r"] = inv.r ? num(*inv.r) : ojson(nullptr);
    iv["r_source"] = detail::source_name(inv.r_source);
    iv["origin_supported"] = inv.origin_supported;
    iv["e0_agreement"] = inv.e0_agreement;
    if (!rep.job.is_polynomial()) iv["socle"] = detail::point_list(rep.socle);
    j["invariants"] = iv;
    if (rep.cohomology) {
        const auto& c = *rep.cohomology;
        j["cohomology"] = ojson{{"h0", num(c.h0)}, {"h1", num(c.h1)}, {"r0", num(c.r0)},
                                {"r1", num(c.r1)}, {"r2", num(c.r2)}, {"valid", c.valid}};
    } else {
        j["cohomology"] = nullptr;
    }
    ojson vs = ojson::array();
    for (const auto& v : rep.verdicts) vs.push_back(detail::verdict_json(v));
    j["verdicts"] = vs;
    j["diagnostics"] = rep.diagnostics;
    return j;
}

/// "path,value" rows, one per JSON leaf, in JSON key order.
inline std::string to_csv(const nlohmann::ordered_json& j) {
    std::vector<std::pair<std::string, std::string>> rows;
    detail::flatten(j, "", rows);
    std::string out = "path,value\n";
    for (const auto& [p, v] : rows) out += detail::csv_field(p) + "," + detail::csv_field(v) + "\n";
    return out;
}

inline std::string to_csv(const Report& rep) { return to_csv(to_json(rep)); }

namespace detail {

inline std::string join(const std::vector<std::int64_t>& v, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

inline std::string points_text(const std::vector<LatticePoint>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? " " : "") + std::string("(") + join(pts[i], ",") + ")";
    return out;
}

}  // namespace detail

inline std::string verdicts_text(const std::vector<VerdictRecord>& verdicts) {
    std::ostringstream out;
    for (const auto& v : verdicts) {
        out << to_string(v.check) << ":\n";
        for (const auto& l : v.links) {
            out << "  " << l.text() << "  [" << l.lhs << " vs " << l.rhs << "] " << (l.holds ? "holds" : "fails");
            if (l.equality) out << ", equality";
            if (l.auxiliary) out << " (auxiliary)";
            out << "\n";
        }
        if (v.conclusion) out << "  => " << *v.conclusion << "\n";
        if (!v.note.empty()) out << "  note: " << v.note << "\n";
    }
    return out.str();
}

inline std::string to_text(const Report& rep) {
    const InvariantReport& inv = rep.invariants;
    std::ostringstream out;
    const JobSpec& job = rep.job;
    if (job.is_polynomial()) {
        std::string q;
        for (const auto& p : job.ideal_poly) q += (q.empty() ? "" : ", ") + to_string(p, job.ring.vars);
        out << "ring: polynomial, order " << job.ring.order.name() << ", q = (" << q << ")\n";
    } else {
        out << "ring: semigroup " << detail::points_text(job.ring.sg_gens) << ", q = "
            << detail::points_text(job.ideal_sg) << "\n";
    }
    out << "dim " << inv.dim << ", nmax " << job.nmax << "\n";
    out << "l(R/q^(n+1))     : " << detail::join(inv.lengths_q.values) << "\n";
    out << "l(R/(q:m)^(n+1)) : " << detail::join(inv.lengths_colon.values) << "\n";
    out << "e(q)   = (" << detail::join(inv.e_q.e) << "), stable from n = " << inv.e_q.n0 << "\n";
    out << "e(q:m) = (" << detail::join(inv.e_colon.e) << "), stable from n = " << inv.e_colon.n0 << "\n";
    out << "l(R/q) = " << inv.length_q << ", l(R/(q:m)) = " << inv.length_colon << ", ir = " << inv.ir
        << ", I(q) = " << inv.I_q << "\n";
    out << "sg(q) = " << inv.sg_q << ", sg(q:m) = " << inv.sg_colon << "\n";
    out << "r = " << (inv.r ? std::to_string(*inv.r) : std::string("unknown"));
    if (inv.r) out << " (" << detail::source_name(inv.r_source) << ")";
    out << "\n";
    if (!rep.socle.empty()) out << "socle points: " << detail::points_text(rep.socle) << "\n";
    if (rep.cohomology) {
        const auto& c = *rep.cohomology;
        out << "cohomology: h0 = " << c.h0 << ", h1 = " << c.h1 << ", r0 = " << c.r0 << ", r1 = " << c.r1
            << ", r2 = " << c.r2 << (c.valid ? "" : " (out of range)") << "\n";
    }
    out << verdicts_text(rep.verdicts);
    for (const auto& d : rep.diagnostics) out << "diagnostic: " << d << "\n";
    return out.str();
}

inline std::string serialize(const Report& rep, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: return to_json(rep).dump(2) + "\n";
        case OutputFormat::csv: return to_csv(rep);
        case OutputFormat::text: return to_text(rep);
    }
    return {};
}

}  // namespace hilbsg
