#include "nstor/corpus.hpp"
#include "nstor/gotzmann.hpp"
#include "nstor/hilbert.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nstor;

namespace {

HilbertPolynomial linear(long c0, long c1) { return HilbertPolynomial({BigRational(c0), BigRational(c1)}); }

/// sum_i C(t + a_i - i + 1, a_i) by direct binomials at an integer point.
BigInt evaluate_decomposition(const std::vector<int>& a, long t) {
    BigInt out = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const long i = static_cast<long>(k) + 1;
        const long top = t + a[k] - i + 1;
        if (a[k] == 0) {
            out += 1;
            continue;
        }
        // C(top, a) as a polynomial in top: product (top - j) / a! for j < a
        BigInt num = 1;
        BigInt den = 1;
        for (int j = 0; j < a[k]; ++j) {
            num *= top - j;
            den *= j + 1;
        }
        out += num / den;
    }
    return out;
}

void expect_round_trip(const HilbertPolynomial& Q, const GotzmannDecomposition& g) {
    for (std::size_t k = 1; k < g.a.size(); ++k) EXPECT_GE(g.a[k - 1], g.a[k]);
    EXPECT_EQ(g.reconstruct(), Q);
    const long last = static_cast<long>(g.s()) + Q.degree() + 2;
    for (long t = 0; t <= last; ++t) EXPECT_EQ(BigRational(evaluate_decomposition(g.a, t)), Q(t)) << "t=" << t;
}

}  // namespace

TEST(Decompose, Examples) {
    EXPECT_EQ(gotzmann_decompose(linear(1, 1)).a, (std::vector<int>{1}));
    EXPECT_EQ(gotzmann_decompose(linear(1, 2)).a, (std::vector<int>{1, 1}));
    EXPECT_EQ(gotzmann_decompose(HilbertPolynomial::constant(3)).a, (std::vector<int>{0, 0, 0}));
}

TEST(Decompose, ConstantsHaveTheirValue) {
    for (long n = 1; n <= 6; ++n) {
        const auto Q = HilbertPolynomial::constant(n);
        const auto g = gotzmann_decompose(Q);
        EXPECT_EQ(g.s(), static_cast<std::size_t>(n));
        expect_round_trip(Q, g);
    }
}

TEST(Decompose, HypersurfacesHaveTheirDegree) {
    for (int r = 2; r <= 3; ++r)
        for (int e = 1; e <= 5; ++e) {
            const auto Q = ambient_hilbert_polynomial(r) - ambient_hilbert_polynomial(r).shifted(e);
            const auto g = gotzmann_decompose(Q);
            EXPECT_EQ(g.s(), static_cast<std::size_t>(e)) << "r=" << r << " e=" << e;
            expect_round_trip(Q, g);
        }
}

TEST(Decompose, IdealEntryPointGoesThroughComplement) {
    const auto P = complement_in_ambient(linear(1, 2), 2);
    EXPECT_EQ(gotzmann_decompose_ideal(P, 2).a, (std::vector<int>{1, 1}));
}

TEST(Decompose, RejectsInadmissible) {
    EXPECT_THROW(gotzmann_decompose(HilbertPolynomial::constant(-1)), NotAdmissible);
    EXPECT_THROW(gotzmann_decompose(linear(0, -1)), NotAdmissible);
    // t - 5 leaves a negative constant
    EXPECT_THROW(gotzmann_decompose(linear(-5, 1)), NotAdmissible);
}

TEST(Hoa, Values) {
    EXPECT_EQ(hoa_bound(2, 2, 1), 625);
    EXPECT_EQ(hoa_bound(2, 1, 2), 8);
    EXPECT_EQ(hoa_bound(3, 2, 1), 3165);
    EXPECT_THROW(hoa_bound(1, 2, 1), InputError);
}

TEST(Hoa, MonotoneInEachArgument) {
    for (int d = 2; d <= 5; ++d)
        for (int b = 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c) {
                const BigInt v = hoa_bound(d, b, c);
                if (d < 5) {
                    EXPECT_LE(v, hoa_bound(d + 1, b, c));
                }
                if (b < 5) {
                    EXPECT_LE(v, hoa_bound(d, b + 1, c));
                }
                if (c < 5) {
                    EXPECT_LE(v, hoa_bound(d, b, c + 1));
                }
            }
}

TEST(Hoa, MajorizesDecompositionLength) {
    std::mt19937_64 rng(53);
    MonomialCorpusOptions o;
    int compared = 0;
    for (int k = 0; k < 200; ++k) {
        const auto I = random_monomial_ideal(rng, o);
        const auto Q = hilbert_polynomial(I);
        if (Q.is_zero()) continue;
        const int b = Q.degree() + 1;
        const int c = I.r() + 1 - b;
        if (c < 1) continue;
        const auto g = gotzmann_decompose(Q);
        expect_round_trip(Q, g);
        EXPECT_LE(BigInt(static_cast<unsigned long>(g.s())), hoa_bound(std::max(2, I.d()), b, c)) << I.to_string();
        ++compared;
    }
    EXPECT_GT(compared, 100);
}

TEST(Parameters, Majorize) {
    const auto p = torsion_bound_parameters(2, 3, std::nullopt);
    EXPECT_EQ(p.n, 6);
    EXPECT_EQ(p.m, pow(BigInt(6), 36));
    EXPECT_GE(p.m, pow(BigInt(60), 12));
    EXPECT_EQ(pow(BigInt(6), 36), pow(BigInt(216), 12));
}

TEST(Parameters, Codim) {
    const auto p = torsion_bound_parameters(2, 3, 1);
    EXPECT_EQ(p.n, 1);
    EXPECT_EQ(p.m, std::max(hoa_bound(2, 3, 1), hoa_bound(2, 2, 2)));
    EXPECT_THROW(torsion_bound_parameters(2, 3, 4), InputError);
}
