#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace hilbsg;
using testing_support::P;
using testing_support::Ps;

namespace {

RingSpec plane() { return RingSpec::polynomial({"x", "y"}); }

RingSpec cone() {
    return RingSpec::polynomial({"x", "y", "z"}, MonomialOrder::degrevlex(),
                                Ps(RingSpec::polynomial({"x", "y", "z"}), {"z^2 - x*y"}));
}

/// Ideal equality in R via reduced Groebner bases of the preimages.
bool same_ideal(const Ideal& a, const Ideal& b) { return a.basis().gens() == b.basis().gens(); }

}  // namespace

TEST(Ideal, Construction) {
    auto r = plane();
    Ideal a(r, Ps(r, {"x", "x", "0", "y"}));
    EXPECT_EQ(a.size(), 2u);
    EXPECT_FALSE(a.is_unit());
    EXPECT_TRUE(Ideal(r, Ps(r, {"x", "3"})).is_unit());
    EXPECT_THROW(Ideal(r, Ps(r, {"0"})), Error);
    EXPECT_THROW(Ideal(r, {}), Error);
    EXPECT_THROW(Ideal(RingSpec::semigroup(1, {{1}}), {}), Error);
}

TEST(Combine, ReferenceValues) {
    auto r = plane();
    Ideal x(r, Ps(r, {"x"})), y(r, Ps(r, {"y"}));
    EXPECT_TRUE(same_ideal(ideal_combine(CombineKind::sum, x, y), Ideal(r, Ps(r, {"x", "y"}))));

    Ideal m = Ideal::maximal(r);
    auto m2 = ideal_combine(CombineKind::product, m, m);
    EXPECT_EQ(m2.size(), 3u);
    EXPECT_TRUE(same_ideal(m2, Ideal(r, Ps(r, {"x^2", "x*y", "y^2"}))));

    auto r4 = RingSpec::polynomial({"X", "Y", "Z", "W"});
    auto prod = ideal_combine(CombineKind::product, Ideal(r4, Ps(r4, {"X+W", "Y+W"})), Ideal(r4, Ps(r4, {"Z+W"})));
    std::vector<Polynomial> want = Ps(r4, {"X*Z + X*W + Z*W + W^2", "Y*Z + Y*W + Z*W + W^2"});
    ASSERT_EQ(prod.size(), 2u);
    for (const auto& w : want)
        EXPECT_TRUE(std::any_of(prod.gens().begin(), prod.gens().end(), [&](const Polynomial& g) { return g == w; }));
}

TEST(Combine, RingMismatch) {
    Ideal a(plane(), Ps(plane(), {"x"}));
    auto other = RingSpec::polynomial({"x", "y"}, MonomialOrder::lex());
    EXPECT_THROW(ideal_combine(CombineKind::sum, a, Ideal(other, Ps(other, {"y"}))), Error);
}

TEST(Power, ReferenceValues) {
    auto r = plane();
    EXPECT_TRUE(same_ideal(ideal_power(Ideal::maximal(r), 2), Ideal(r, Ps(r, {"x^2", "x*y", "y^2"}))));
    auto q2 = ideal_power(Ideal(r, Ps(r, {"x^2", "y^3"})), 2);
    EXPECT_EQ(q2.size(), 3u);
    EXPECT_TRUE(same_ideal(q2, Ideal(r, Ps(r, {"x^4", "x^2*y^3", "y^6"}))));
    EXPECT_THROW(ideal_power(Ideal::maximal(r), 0), Error);
}

TEST(Power, MatchesIteratedProductAndInterreductionIsHarmless) {
    auto r = RingSpec::polynomial({"x", "y", "z"});
    Ideal a(r, Ps(r, {"x + y^2", "y*z", "z^2 - x"}));
    IdealOptions tight{4};
    auto p3 = ideal_power(a, 3);
    auto iter = ideal_combine(CombineKind::product, ideal_combine(CombineKind::product, a, a), a);
    EXPECT_TRUE(same_ideal(p3, iter));
    auto p3_small = ideal_power(a, 3, tight);
    EXPECT_LE(p3_small.size(), p3.size());
    EXPECT_TRUE(same_ideal(p3_small, p3));
}

TEST(Intersect, ReferenceValues) {
    auto r4 = RingSpec::polynomial({"X", "Y", "Z", "W"});
    auto meet = ideal_intersect(Ideal(r4, Ps(r4, {"X", "Y", "Z"})), Ideal(r4, Ps(r4, {"W"})));
    EXPECT_TRUE(same_ideal(meet, Ideal(r4, Ps(r4, {"X*W", "Y*W", "Z*W"}))));

    auto r = plane();
    Ideal x(r, Ps(r, {"x"}));
    EXPECT_TRUE(same_ideal(ideal_intersect(x, x), x));
    EXPECT_TRUE(same_ideal(ideal_intersect(Ideal(r, Ps(r, {"x^2"})), Ideal(r, Ps(r, {"y"}))),
                           Ideal(r, Ps(r, {"x^2*y"}))));
}

TEST(Intersect, MonomialIdealsMatchLcmOracle) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::uint32_t> ex(0, 3);
    auto r = RingSpec::polynomial({"x", "y", "z"});
    for (int t = 0; t < 10; ++t) {
        std::vector<Monomial> a, b;
        for (int k = 0; k < 2; ++k) a.push_back(Monomial({ex(rng), ex(rng), ex(rng) + 1}));
        for (int k = 0; k < 2; ++k) b.push_back(Monomial({ex(rng) + 1, ex(rng), ex(rng)}));
        std::vector<Polynomial> ga, gb, lcms;
        for (const auto& m : a) ga.push_back(Polynomial::monomial(m, 1, r.order));
        for (const auto& m : b) gb.push_back(Polynomial::monomial(m, 1, r.order));
        for (const auto& ma : a)
            for (const auto& mb : b) lcms.push_back(Polynomial::monomial(ma.lcm(mb), 1, r.order));
        EXPECT_TRUE(same_ideal(ideal_intersect(Ideal(r, ga), Ideal(r, gb)), Ideal(r, lcms)));
    }
}

TEST(Colon, ReferenceValues) {
    auto r = plane();
    Ideal q(r, Ps(r, {"x^2", "y^3"}));
    auto c = ideal_colon(q, Ideal::maximal(r));
    EXPECT_FALSE(c.is_unit());
    EXPECT_TRUE(same_ideal(c, Ideal(r, Ps(r, {"x^2", "x*y^2", "y^3"}))));

    EXPECT_TRUE(ideal_colon(Ideal::maximal(r), Ideal::maximal(r)).is_unit());

    auto rc = cone();
    auto cc = ideal_colon(Ideal(rc, Ps(rc, {"x", "y"})), Ideal::maximal(rc));
    EXPECT_FALSE(cc.is_unit());
    EXPECT_TRUE(same_ideal(cc, Ideal::maximal(rc)));
}

TEST(Colon, ByZeroDivisorModuloQuotient) {
    // In k[x,y,z]/(z^2, xz, yz): z*m = 0, so (x, y) : (z) = m.
    auto base = RingSpec::polynomial({"x", "y", "z"});
    auto r = RingSpec::polynomial({"x", "y", "z"}, base.order, Ps(base, {"z^2", "x*z", "y*z"}));
    EXPECT_TRUE(same_ideal(ideal_colon(Ideal(r, Ps(r, {"x", "y"})), Ideal(r, Ps(r, {"z"}))), Ideal::maximal(r)));
    // 0 : z-type colon with a generator that vanishes in R.
    EXPECT_TRUE(ideal_colon(Ideal(r, Ps(r, {"x"})), Ideal(r, Ps(r, {"z^2"}))).is_unit());
}

TEST(Colon, RandomMonomialIdealsMatchSocleOracle) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::uint32_t> pw(1, 4), ex(0, 3);
    auto r = RingSpec::polynomial({"x", "y", "z"});
    for (int t = 0; t < 12; ++t) {
        std::vector<oracle::Exps> mons{{pw(rng), 0, 0}, {0, pw(rng), 0}, {0, 0, pw(rng)}};
        for (int k = 0; k < 2; ++k) mons.push_back({ex(rng), ex(rng), ex(rng)});
        std::vector<Polynomial> gens;
        for (const auto& m : mons) gens.push_back(Polynomial::monomial(Monomial(m), 1, r.order));
        Ideal q(r, gens);
        if (q.is_unit()) continue;
        auto c = ideal_colon(q, Ideal::maximal(r));
        auto socle = oracle::monomial_socle(mons);
        auto len_q = *oracle::monomial_colength(mons);
        EXPECT_EQ(quotient_length(r, c.gens()), len_q - socle.size());
        for (const auto& s : socle) { EXPECT_TRUE(c.contains(Polynomial::monomial(Monomial(s), 1, r.order))); }
    }
}
