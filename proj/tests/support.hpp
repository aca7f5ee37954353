#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hilbsg/hilbsg.hpp"
#include "oracle.hpp"

namespace hilbsg {

// Readable gtest failure messages.
inline void PrintTo(const Polynomial& f, std::ostream* os) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < f.arity(); ++i) vars.push_back("v" + std::to_string(i));
    *os << to_string(f, vars);
}

inline void PrintTo(const Monomial& m, std::ostream* os) {
    *os << "[";
    for (std::size_t i = 0; i < m.exponents().size(); ++i) *os << (i ? "," : "") << m.exponents()[i];
    *os << "]";
}

}  // namespace hilbsg

namespace testing_support {

inline hilbsg::Polynomial P(const hilbsg::RingSpec& ring, const std::string& src) {
    return hilbsg::parse_polynomial(src, ring);
}

inline std::vector<hilbsg::Polynomial> Ps(const hilbsg::RingSpec& ring, const std::vector<std::string>& srcs) {
    std::vector<hilbsg::Polynomial> out;
    for (const auto& s : srcs) out.push_back(P(ring, s));
    return out;
}

inline oracle::Poly to_oracle(const hilbsg::Polynomial& f) {
    oracle::Poly out;
    for (const auto& t : f.terms()) out[t.mono.exponents()] = t.coeff;
    return out;
}

inline std::vector<oracle::Poly> to_oracle(const std::vector<hilbsg::Polynomial>& fs) {
    std::vector<oracle::Poly> out;
    for (const auto& f : fs) out.push_back(to_oracle(f));
    return out;
}

/// Local length of R/I^k for R = P/J0 through the linear-algebra oracle.
inline std::size_t oracle_power_length(const hilbsg::Ideal& ideal, std::size_t k) {
    auto gens = oracle::power_gens(to_oracle(ideal.gens()), k);
    for (const auto& q : ideal.ring().quotient_gens) gens.push_back(to_oracle(q));
    auto len = oracle::local_length(gens, ideal.ring().arity());
    if (!len) throw std::runtime_error("oracle did not stabilize");
    return *len;
}

/// Random polynomial with small integer coefficients.
inline hilbsg::Polynomial random_poly(std::mt19937& rng, std::size_t arity, const hilbsg::MonomialOrder& order,
                                      std::size_t max_terms = 4, std::uint32_t max_exp = 3) {
    std::uniform_int_distribution<int> coeff(-5, 5), terms(0, static_cast<int>(max_terms));
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::vector<hilbsg::Term> ts;
    int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<std::uint32_t> e(arity);
        for (auto& x : e) x = exp(rng);
        ts.push_back({hilbsg::Monomial(e), hilbsg::Rational(coeff(rng))});
    }
    return hilbsg::Polynomial::from_terms(arity, order, std::move(ts));
}

}  // namespace testing_support
