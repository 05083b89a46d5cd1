#include "nstor/corpus.hpp"
#include "nstor/groebner.hpp"
#include "nstor/parse.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nstor;

namespace {

template <Field F>
std::vector<std::string> strings(const GroebnerBasis<F>& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.elements) out.push_back(g.to_string());
    return out;
}

IdealPresentation<Rational> twisted_cubic() {
    return parse_ideal<Rational>("x0*x2 - x1^2\nx1*x3 - x2^2\nx0*x3 - x1*x2", 3);
}

template <Field F>
void expect_s_pairs_reduce(const GroebnerBasis<F>& gb) {
    for (std::size_t a = 0; a < gb.elements.size(); ++a)
        for (std::size_t b = a + 1; b < gb.elements.size(); ++b)
            EXPECT_TRUE(gb.normal_form(s_polynomial(gb.elements[a], gb.elements[b], gb.order)).is_zero());
}

}  // namespace

TEST(Buchberger, PrincipalIdealIsItsOwnBasis) {
    const auto I = parse_ideal<Rational>("x0^2 - x1^2", 1);
    const auto gb = buchberger(I, MonomialOrder::lex);
    ASSERT_EQ(gb.elements.size(), 1u);
    EXPECT_EQ(gb.elements[0], I.generators[0]);
    EXPECT_EQ(initial_ideal(I, MonomialOrder::lex), MonomialIdeal(1, {Monomial({2, 0})}));
}

TEST(Buchberger, LinearIdealReduces) {
    const auto I = parse_ideal<Rational>("x0 - x1\nx1 - x2", 2);
    const auto gb = buchberger(I, MonomialOrder::lex);
    EXPECT_EQ(strings(gb), (std::vector<std::string>{"x0 - x2", "x1 - x2"}));
}

TEST(Buchberger, TwistedCubicGrevlex) {
    const auto I = twisted_cubic();
    const auto gb = buchberger(I, MonomialOrder::grevlex);
    EXPECT_EQ(gb.elements.size(), 3u);
    expect_s_pairs_reduce(gb);
    EXPECT_EQ(gb.initial_ideal(), MonomialIdeal(3, {Monomial({0, 2, 0, 0}), Monomial({0, 1, 1, 0}), Monomial({0, 0, 2, 0})}));
    for (int t = 0; t <= 6; ++t) {
        EXPECT_EQ(oracle::hilbert_function(I, t), 3 * t + 1);
        EXPECT_EQ(oracle::standard_count(gb.initial_ideal(), t), 3 * t + 1);
    }
}

TEST(Buchberger, MonomialInputKeepsMinimalGenerators) {
    const auto I = parse_ideal<Rational>("x0^2*x1\nx0^2\nx1^3", 1);
    EXPECT_EQ(initial_ideal(I, MonomialOrder::grevlex), MonomialIdeal(1, {Monomial({2, 0}), Monomial({0, 3})}));
}

TEST(Buchberger, DegreeCapSurfaces) {
    const auto I = twisted_cubic();
    GroebnerOptions o;
    o.degree_cap = 3;
    EXPECT_NO_THROW(buchberger(I, MonomialOrder::grevlex, o));
    o.degree_cap = 2;
    EXPECT_THROW(buchberger(I, MonomialOrder::grevlex, o), DegreeCapExceeded);
    o.degree_cap = 3;
    const auto J = parse_ideal<Rational>("x0^3 - x1^2*x2\nx0*x1^2 - x2^3", 2);
    EXPECT_THROW(buchberger(J, MonomialOrder::lex, o), DegreeCapExceeded);
}

TEST(DubeBound, Values) {
    EXPECT_EQ(dube_bound(2, 2), 32);
    EXPECT_EQ(dube_bound(2, 1), 8);
    EXPECT_EQ(dube_bound(3, 2), 113);
}

class RandomIdeals : public ::testing::TestWithParam<MonomialOrder> {};

TEST_P(RandomIdeals, ReducedBasisProperties) {
    const MonomialOrder order = GetParam();
    std::mt19937_64 rng(5);
    PolynomialCorpusOptions po;
    for (int k = 0; k < 60; ++k) {
        const auto I = random_homogeneous_ideal<Fp>(rng, po);
        const auto gb = buchberger(I, order);
        expect_s_pairs_reduce(gb);
        for (const auto& g : I.generators) EXPECT_TRUE(gb.contains(g));
        // idempotence
        const auto again = buchberger(IdealPresentation<Fp>{I.r, gb.elements}, order);
        EXPECT_EQ(again.elements, gb.elements);
        const auto in = gb.initial_ideal();
        EXPECT_LE(BigInt(in.d()), dube_bound(std::max(1, I.d()), I.r));
        for (int t = 0; t <= 6; ++t) EXPECT_EQ(oracle::standard_count(in, t), oracle::hilbert_function(I, t));
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, RandomIdeals,
                         ::testing::Values(MonomialOrder::lex, MonomialOrder::grlex, MonomialOrder::grevlex),
                         [](const auto& info) { return std::string(to_string(info.param)); });
