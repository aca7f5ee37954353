// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.
//
// Exit status is the number of failing criteria that were not named with
// --known-failure, so a listed failure is still printed as FAIL but does not
// break the test run.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hilbsg/hilbsg.hpp"
#include "oracle.hpp"

using namespace hilbsg;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string points(const std::vector<LatticePoint>& pts) {
    std::string out;
    for (const auto& p : pts) out += (out.empty() ? "" : " ") + join(p);
    return out;
}

std::vector<Polynomial> polys(const RingSpec& ring, std::vector<std::string> srcs) {
    std::vector<Polynomial> out;
    for (const auto& s : srcs) out.push_back(parse_polynomial(s, ring));
    return out;
}

RingSpec quotient_ring(std::vector<std::string> vars, std::vector<std::string> rels) {
    auto base = RingSpec::polynomial(vars);
    return RingSpec::polynomial(vars, base.order, polys(base, rels));
}

const std::vector<LatticePoint> kGapped{{1, 0}, {1, 2}, {2, 3}, {3, 1}};

SemigroupIdeal q_a(std::int64_t a) { return SemigroupIdeal(AffineSemigroup(2, kGapped), {{a, 0}, {a, 2 * a}}); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string timing(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

const InvariantReport& gapped_report(std::int64_t a) {
    static std::map<std::int64_t, InvariantReport> cache;
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, build_report(q_a(a), 5, 2)).first;
    return it->second;
}

const InvariantReport& solid_line_report() {
    static const InvariantReport rep = [] {
        auto r = quotient_ring({"X", "Y", "Z", "W"}, {"X*W", "Y*W", "Z*W"});
        return build_report(Ideal(r, polys(r, {"X+W", "Y+W", "Z+W"})), 5, 1);
    }();
    return rep;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    std::string detail;
    bool ok = true;
    for (std::int64_t a : {6, 7}) {
        auto t0 = std::chrono::steady_clock::now();
        const auto& rep = gapped_report(a);
        double took = seconds_since(t0);
        const std::int64_t e0 = 2 * a * a;
        for (std::int64_t n = 0; n <= 5; ++n) {
            ok &= rep.lengths_q.values[n] == e0 * binomial(n + 2, 2) + 2 * (n + 1);
            ok &= rep.lengths_colon.values[n] == e0 * binomial(n + 2, 2) - (n + 1) - 1;
        }
        ok &= rep.e_q.e == std::vector<std::int64_t>{e0, -2, 0};
        ok &= rep.e_colon.e == std::vector<std::int64_t>{e0, 1, -1};
        ok &= took < 10.0;
        detail += std::string(detail.empty() ? "" : "; ") + "a=" + std::to_string(a) + ": e_q=" + join(rep.e_q.e) + " e_colon=" + join(rep.e_colon.e) + " in " +
                  timing(took);
    }
    return {ok, detail};
}

Outcome criterion2() {
    auto res = sg_colon_max(q_a(6));
    std::vector<LatticePoint> want{{8, 13}, {11, 11}, {10, 10}, {8, 1}};
    std::sort(want.begin(), want.end());
    auto got = res.socle_points;
    std::sort(got.begin(), got.end());
    const auto& rep = gapped_report(6);
    return {got == want && rep.ir == 4, "socle " + points(res.socle_points) + ", ir=" + std::to_string(rep.ir)};
}

Outcome criterion3() {
    auto gap = sg_closure_gap(AffineSemigroup(2, kGapped));
    return {gap.size() == 2, "gap " + points(gap)};
}

Outcome criterion4() {
    auto c = infer_cohomology_dim2(gapped_report(6));
    std::vector<std::int64_t> got{c.h0, c.h1, c.r0, c.r1, c.r2};
    return {got == std::vector<std::int64_t>{0, 2, 0, 1, 2}, "(h0,h1,r0,r1,r2)=" + join(got)};
}

Outcome criterion5a() {
    auto t0 = std::chrono::steady_clock::now();
    const auto& rep = solid_line_report();
    double took = seconds_since(t0);
    auto r = quotient_ring({"X", "Y", "Z", "W"}, {"X*W", "Y*W", "Z*W"});
    Ideal q(r, polys(r, {"X+W", "Y+W", "Z+W"}));
    std::vector<oracle::Poly> base;
    for (const auto& g : q.gens()) {
        oracle::Poly p;
        for (const auto& t : g.terms()) p[t.mono.exponents()] = t.coeff;
        base.push_back(p);
    }
    bool ok = took < 60.0;
    for (std::int64_t n = 0; n <= 5; ++n) {
        std::int64_t closed = binomial(n + 3, 3) + (n + 1);
        ok &= rep.lengths_q.values[n] == closed;
        if (n <= 3) {
            auto gens = oracle::power_gens(base, static_cast<std::size_t>(n + 1));
            for (const auto& rel : r.quotient_gens) {
                oracle::Poly p;
                for (const auto& t : rel.terms()) p[t.mono.exponents()] = t.coeff;
                gens.push_back(p);
            }
            auto len = oracle::local_length(gens, 4);
            ok &= len && static_cast<std::int64_t>(*len) == closed;
        }
    }
    return {ok, "lengths " + join(rep.lengths_q.values) + " in " + timing(took)};
}

Outcome criterion5b() {
    const auto& rep = solid_line_report();
    return {rep.e_q.e == std::vector<std::int64_t>{1, 0, 1, 0}, "e_q=" + join(rep.e_q.e)};
}

Outcome criterion5c() {
    const auto& rep = solid_line_report();
    return {rep.e_colon.coeff(1) == 1, "e1(q:m)=" + std::to_string(rep.e_colon.coeff(1)) + " (e_colon=" +
                                           join(rep.e_colon.e) + ", ir=" + std::to_string(rep.ir) + ")"};
}

Outcome criterion5d() {
    const auto& rep = solid_line_report();
    return {rep.e_colon.coeff(2) == 1, "e2(q:m)=" + std::to_string(rep.e_colon.coeff(2))};
}

Outcome criterion5e() {
    auto v = check_e2_chain(solid_line_report(), {Assumption::non_regular});
    bool ok = v.any_equality() && !v.conclusion && v.note.find("unmixed") != std::string::npos;
    std::string detail;
    for (const auto& l : v.links)
        detail += l.text() + " [" + std::to_string(l.lhs) + " vs " + std::to_string(l.rhs) + "]" +
                  (l.equality ? " eq" : "") + "; ";
    return {ok, detail + "note: " + v.note};
}

Outcome criterion6() {
    auto r = quotient_ring({"x", "y", "z"}, {"z^2 - x*y"});
    auto rep = build_report(Ideal(r, polys(r, {"x", "y"})), 5, 1);
    const Assertions all{Assumption::unmixed, Assumption::non_regular, Assumption::c_parameter,
                         Assumption::deep_in_g_power};
    bool ok = rep.e_q.e == std::vector<std::int64_t>{2, 0, 0} && rep.e_colon.e == std::vector<std::int64_t>{2, 1, 0} &&
              rep.ir == 1 && rep.sg_q == 0 && rep.sg_colon == 0;
    auto sg = check_sg_chain(rep, all);
    auto gor = check_gorenstein(rep, all);
    auto qb = check_quasi_buchsbaum(rep, all);
    ok &= sg.conclusion == "Cohen-Macaulay" && sg.any_equality();
    ok &= gor.conclusion == "Gorenstein" && gor.links[0].equality;
    ok &= qb.conclusion == "quasi-Buchsbaum" && qb.links[0].equality;
    return {ok, "e_q=" + join(rep.e_q.e) + " e_colon=" + join(rep.e_colon.e) + " ir=" + std::to_string(rep.ir) +
                    " sg=" + std::to_string(rep.sg_q) + "/" + std::to_string(rep.sg_colon) + "; " +
                    sg.conclusion.value_or("-") + ", " + gor.conclusion.value_or("-") + ", " +
                    qb.conclusion.value_or("-")};
}

Outcome criterion7(const std::string& jobs_dir) {
    const std::vector<std::string> corpus{"gapped_a6.spec",      "gapped_a7.spec",  "solid_line.spec",
                                          "solid_line_deep.spec",    "quadric_cone.spec", "regular2.spec",
                                          "regular3.spec",     "complete_intersection.spec",
                                          "numerical_345.spec", "h0_ring.spec"};
    bool ok = true;
    std::size_t lemma = 0, goto_n = 0, socle = 0;
    std::string bad;
    for (const auto& name : corpus) {
        std::ifstream in(jobs_dir + "/" + name);
        std::ostringstream ss;
        ss << in.rdbuf();
        auto rep = run(parse_spec(ss.str()));
        const auto& inv = rep.invariants;
        if (inv.e0_agreement) {
            ++lemma;
            if (check_lemma31(inv).all_hold() != true) ok = false, bad += name + " lemma31; ";
        }
        ++goto_n;
        if (!check_goto_nishida(inv).all_hold()) ok = false, bad += name + " goto-nishida; ";
        if (!rep.job.is_polynomial()) {
            SemigroupIdeal q(AffineSemigroup::from_ring(rep.job.ring), rep.job.ideal_sg);
            for (std::size_t k = 1; k <= 3; ++k) {
                auto qk = k == 1 ? q : sg_ideal_power(q, k);
                auto res = sg_colon_max(qk);
                ++socle;
                if (sg_length(res.ideal) != sg_length(qk) - res.socle_points.size())
                    ok = false, bad += name + " socle k=" + std::to_string(k) + "; ";
            }
        }
    }
    ok &= corpus.size() >= 8;
    return {ok, std::to_string(corpus.size()) + " rings: lemma31 on " + std::to_string(lemma) + ", goto-nishida on " +
                    std::to_string(goto_n) + ", socle drop on " + std::to_string(socle) + " ideals" +
                    (bad.empty() ? "" : "; failures: " + bad)};
}

Outcome criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> arity_d(1, 3), extra_d(0, 3);
    std::size_t tested = 0;
    std::string bad;
    while (tested < 25) {
        const std::size_t n = static_cast<std::size_t>(arity_d(rng));
        std::vector<oracle::Exps> mons;
        std::uniform_int_distribution<std::uint32_t> pure(1, 4);
        for (std::size_t i = 0; i < n; ++i) {
            oracle::Exps e(n, 0);
            e[i] = pure(rng);
            mons.push_back(e);
        }
        int extra = extra_d(rng);
        for (int k = 0; k < extra; ++k) {
            oracle::Exps e(n, 0);
            std::uint32_t budget = std::uniform_int_distribution<std::uint32_t>(1, 4)(rng);
            for (std::uint32_t b = 0; b < budget; ++b) ++e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
            mons.push_back(e);
        }
        std::vector<std::string> vars{"x", "y", "z"};
        vars.resize(n);
        auto ring = RingSpec::polynomial(vars);
        std::vector<Polynomial> gens;
        for (const auto& m : mons) gens.push_back(Polynomial::monomial(Monomial(m), 1, ring.order));
        Ideal q(ring, gens);
        auto want_len = *oracle::monomial_colength(mons);
        if (want_len < 2) continue;  // q = m: the colon is the unit ideal
        ++tested;
        std::string tag = "case " + std::to_string(tested) + "; ";

        auto len = quotient_length(ring, gens);
        if (!len || *len != want_len) bad += tag;

        // q : m is spanned by q and the socle monomials.
        auto colon = ideal_colon(q, Ideal::maximal(ring));
        auto socle = oracle::monomial_socle(mons);
        std::vector<oracle::Exps> colon_mons = mons;
        colon_mons.insert(colon_mons.end(), socle.begin(), socle.end());
        std::vector<Polynomial> want_colon;
        for (const auto& m : colon_mons) want_colon.push_back(Polynomial::monomial(Monomial(m), 1, ring.order));
        if (colon.basis().gens() != Ideal(ring, want_colon).basis().gens()) bad += "colon " + tag;

        auto seq = hs_sequence(q, n, 3);
        for (std::size_t k = 0; k <= 3; ++k)
            if (seq.values[k] != static_cast<std::int64_t>(*oracle::monomial_colength(oracle::monomial_power(mons, k + 1))))
                bad += "hs " + tag;
    }
    double took = seconds_since(t0);
    return {bad.empty() && took < 60.0,
            std::to_string(tested) + " ideals in " + timing(took) + (bad.empty() ? "" : "; mismatches: " + bad)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string jobs_dir = HILBSG_JOBS_DIR;
    std::vector<std::string> known;
    app.add_option("--jobs", jobs_dir, "directory with the job corpus");
    app.add_option("--known-failure", known, "criterion id expected to fail");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1", criterion1},   {"2", criterion2},   {"3", criterion3},   {"4", criterion4},
        {"5a", criterion5a}, {"5b", criterion5b}, {"5c", criterion5c}, {"5d", criterion5d},
        {"5e", criterion5e}, {"6", criterion6},   {"7", [&] { return criterion7(jobs_dir); }},
        {"8", criterion8},
    };
    const std::set<std::string> expected(known.begin(), known.end());
    int unexpected = 0;
    for (const auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail;
        if (!o.pass && expected.contains(id)) std::cout << " [known failure]";
        if (o.pass && expected.contains(id)) std::cout << " [listed as known failure but passed]";
        std::cout << "\n";
        if (!o.pass && !expected.contains(id)) ++unexpected;
        if (o.pass && expected.contains(id)) ++unexpected;
    }
    return unexpected;
}
