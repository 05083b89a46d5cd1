#include "nstor/grassmann.hpp"
#include "nstor/parse.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nstor;

namespace {

using Q = Rational;

Q random_q(std::mt19937_64& rng) { return Q(static_cast<long>(rng() % 11) - 5); }

std::vector<std::vector<Q>> random_rows(std::mt19937_64& rng, int n, int dimV) {
    std::vector<std::vector<Q>> A(static_cast<std::size_t>(n), std::vector<Q>(static_cast<std::size_t>(dimV)));
    for (auto& row : A)
        for (auto& v : row) v = random_q(rng);
    return A;
}

std::size_t rank_of(const std::vector<std::vector<Q>>& rows, std::size_t cols) {
    Matrix<Q> M(0, cols);
    for (const auto& r : rows) M.append_row(r);
    return rows.empty() ? 0 : rank(M);
}

/// z_a = det of the columns a of A, in the order given by a.
Q minor_of(const std::vector<std::vector<Q>>& A, const std::vector<int>& a) {
    std::vector<std::vector<Q>> sub;
    for (const auto& row : A) {
        std::vector<Q> s;
        for (int c : a) s.push_back(row[static_cast<std::size_t>(c)]);
        sub.push_back(s);
    }
    return oracle::determinant(sub);
}

std::vector<Q> raw_plucker(const PluckerIndex& P, const std::vector<std::vector<Q>>& A) {
    std::vector<Q> z;
    for (std::size_t k = 0; k < P.size(); ++k) z.push_back(minor_of(A, P.tuple(k)));
    return z;
}

int inversion_sign(const std::vector<int>& a) {
    int inv = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) inv += a[i] > a[j];
    return inv % 2 == 0 ? 1 : -1;
}

template <typename Visit>
void for_each_tuple(int n, int dimV, Visit&& f) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (;;) {
        f(a);
        int i = 0;
        while (i < n && ++a[static_cast<std::size_t>(i)] == dimV) a[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return;
    }
}

/// Coordinate subspace of R_t spanned by every basis monomial except the k-th.
std::vector<std::vector<Q>> all_but(std::size_t dimV, std::size_t k) {
    std::vector<std::vector<Q>> rows;
    for (std::size_t j = 0; j < dimV; ++j)
        if (j != k) {
            std::vector<Q> e(dimV);
            e[j] = Q(1L);
            rows.push_back(e);
        }
    return rows;
}

LinearForm<Q> var(std::size_t v, int sign) { return LinearForm<Q>::variable(v, sign); }

}  // namespace

TEST(PluckerIndexTest, SignCoherence) {
    std::mt19937_64 rng(61);
    for (int n = 1; n <= 3; ++n)
        for (int dimV = n; dimV <= 5; ++dimV) {
            const PluckerIndex P(n, dimV);
            const auto A = random_rows(rng, n, dimV);
            for_each_tuple(n, dimV, [&](const std::vector<int>& a) {
                const auto c = P.canonical(a);
                std::vector<int> s = a;
                std::sort(s.begin(), s.end());
                const bool repeated = std::adjacent_find(s.begin(), s.end()) != s.end();
                ASSERT_EQ(c.has_value(), !repeated);
                if (!c) {
                    EXPECT_TRUE(minor_of(A, a).is_zero());
                    return;
                }
                EXPECT_EQ(P.tuple(c->first), s);
                EXPECT_EQ(c->second, inversion_sign(a));
                EXPECT_EQ(minor_of(A, a), Q(static_cast<long>(c->second)) * minor_of(A, s));
            });
        }
}

TEST(PluckerIndexTest, NamesResolveBack) {
    const PluckerIndex P(2, 4);
    const auto resolve = P.resolver();
    for (std::size_t k = 0; k < P.size(); ++k) EXPECT_EQ(resolve(P.name(k)), static_cast<int>(k));
    EXPECT_EQ(P.name(P.index({1, 3})), "z_1_3");
    EXPECT_THROW(resolve("z_3_1"), VariableOutOfRange);
    EXPECT_THROW(P.canonical({0, 4}), IndexOutOfRange);
}

TEST(KMatrix, SingleSlot) {
    const PluckerIndex P(1, 3);
    const auto K = k_matrix<Q>(P, {0});
    ASSERT_EQ(K.cols(), 1u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(K.at(i, 0), var(i, 1));
}

TEST(KMatrix, SignsAndZeros) {
    const PluckerIndex P(2, 3);
    const auto K = k_matrix<Q>(P, {0, 1});
    const auto z01 = P.index({0, 1});
    const auto z02 = P.index({0, 2});
    const auto z12 = P.index({1, 2});
    EXPECT_EQ(K.at(0, 0), var(z01, 1));
    EXPECT_TRUE(K.at(0, 1).is_zero());
    EXPECT_TRUE(K.at(1, 0).is_zero());
    EXPECT_EQ(K.at(1, 1), var(z01, 1));
    EXPECT_EQ(K.at(2, 0), var(z12, -1));
    EXPECT_EQ(K.at(2, 1), var(z02, 1));
    EXPECT_THROW(k_matrix<Q>(P, {0, 3}), IndexOutOfRange);
    const auto R = k_matrix<Q>(P, {2, 2});
    EXPECT_TRUE(R.at(2, 0).is_zero());
    EXPECT_TRUE(R.at(2, 1).is_zero());
}

TEST(LMatrix, OneSlotCollapses) {
    const PluckerIndex P(1, 3);
    LMatrixOptions raw;
    raw.dedup = ColumnDedup::none;
    const auto L0 = l_matrix<Q>(P, raw);
    EXPECT_EQ(L0.cols(), 3u);
    for (std::size_t c = 1; c < 3; ++c) EXPECT_EQ(L0.columns[c], L0.columns[0]);
    EXPECT_EQ(l_matrix<Q>(P).cols(), 1u);
}

TEST(LMatrix, SquareGrassmannian) {
    const PluckerIndex P(2, 2);
    LMatrixOptions raw;
    raw.dedup = ColumnDedup::none;
    const auto L = l_matrix<Q>(P, raw);
    EXPECT_EQ(L.cols(), 2u * 4u);
    for (const auto& col : L.columns)
        for (const auto& e : col)
            for (const auto& [v, c] : e.terms) {
                EXPECT_EQ(v, 0u);
                EXPECT_TRUE(c == Q(1L) || c == Q(-1L));
            }
}

TEST(LMatrix, BudgetEnforced) {
    const PluckerIndex P(3, 6);
    LMatrixOptions o;
    o.column_budget = 100;
    EXPECT_THROW(l_matrix<Q>(P, o), ColumnBudgetExceeded);
}

TEST(LMatrix, LocalChartGeneration) {
    // On the chart z_a = 1 the subspace is the row space of A with A restricted to a the identity;
    // every K_b column must lie in it and together they span it.
    std::mt19937_64 rng(67);
    for (int n = 1; n <= 2; ++n)
        for (int dimV = n; dimV <= 4; ++dimV) {
            const PluckerIndex P(n, dimV);
            for (std::size_t k = 0; k < P.size(); ++k) {
                const auto& a = P.tuple(k);
                auto A = random_rows(rng, n, dimV);
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i)
                        A[static_cast<std::size_t>(j)][static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] = Q(i == j ? 1L : 0L);
                const auto z = raw_plucker(P, A);
                ASSERT_EQ(z[k], Q(1L));
                std::vector<std::vector<Q>> images;
                for_each_tuple(n, dimV, [&](const std::vector<int>& b) {
                    const auto Kb = k_matrix<Q>(P, b).evaluate(z);
                    for (std::size_t c = 0; c < Kb.cols(); ++c) {
                        std::vector<Q> col;
                        for (std::size_t i = 0; i < Kb.rows(); ++i) col.push_back(Kb(i, c));
                        images.push_back(col);
                    }
                });
                auto with_A = images;
                with_A.insert(with_A.end(), A.begin(), A.end());
                EXPECT_EQ(rank_of(images, static_cast<std::size_t>(dimV)), static_cast<std::size_t>(n));
                EXPECT_EQ(rank_of(with_A, static_cast<std::size_t>(dimV)), static_cast<std::size_t>(n));
            }
        }
}

TEST(Fitting, DiagonalPencil) {
    // Lambda = (z | diag(1,2,3) z): rank drops exactly at the coordinate points
    const PluckerIndex P(1, 3);
    Matrix<Q> u0(3, 3), u1(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        u0(i, i) = Q(1L);
        u1(i, i) = Q(static_cast<long>(i) + 1);
    }
    const auto sys = fitting_system<Q>(P, {u0, u1}, 2);
    EXPECT_TRUE(sys.entries_linear());
    const auto minors = sys.enumerate(1000);
    EXPECT_EQ(minors.size(), 3u);
    for (const auto& p : minors) EXPECT_EQ(p.degree(), 2);
    std::mt19937_64 rng(71);
    for (int k = 0; k < 40; ++k) {
        std::vector<Q> z(3);
        for (auto& v : z) v = random_q(rng);
        if (k < 3) z = {Q(k == 0 ? 3L : 0L), Q(k == 1 ? -2L : 0L), Q(k == 2 ? 1L : 0L)};
        bool all_zero = true;
        for (const auto& p : minors) all_zero = all_zero && p.evaluate(z).is_zero();
        EXPECT_EQ(all_zero, sys.vanishes_at(z));
        if (k < 3) {
            EXPECT_TRUE(all_zero);
        }
    }
    EXPECT_THROW(sys.enumerate(2), MinorBudgetExceeded);
}

TEST(Fitting, UnitMinorsAreEntries) {
    const PluckerIndex P(1, 2);
    Matrix<Q> u(2, 2);
    u(0, 0) = Q(1L);
    u(1, 1) = Q(1L);
    const auto minors = fitting_equations<Q>(P, {u}, 1);
    ASSERT_EQ(minors.size(), 2u);
    for (const auto& p : minors) EXPECT_EQ(p.degree(), 1);
}

TEST(LinearConditions, Examples) {
    const PluckerIndex P(1, 2);
    const auto c = linear_conditions<Q>(P, {{Q(1L), Q(0L)}});
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(detail::sign_normalized(c[0]), Polynomial<Q>::variable(1, 1));
    EXPECT_TRUE(linear_conditions<Q>(P, {}).empty());
}

TEST(LinearConditions, SpanningSetHasNoZeroOnTheGrassmannian) {
    std::mt19937_64 rng(73);
    const PluckerIndex P(2, 4);
    const auto U = all_but(4, 4);
    const auto conds = linear_conditions(P, U);
    for (int k = 0; k < 30; ++k) {
        const auto A = random_rows(rng, 2, 4);
        if (rank_of(A, 4) < 2) continue;
        const auto z = raw_plucker(P, A);
        bool all_zero = true;
        for (const auto& l : conds) all_zero = all_zero && l.evaluate(z).is_zero();
        EXPECT_FALSE(all_zero);
    }
}

TEST(LinearConditions, ContainmentOracle) {
    std::mt19937_64 rng(79);
    for (int n = 1; n <= 3; ++n)
        for (int dimV = n + 1; dimV <= 5; ++dimV) {
            const PluckerIndex P(n, dimV);
            for (int k = 0; k < 10; ++k) {
                const auto A = random_rows(rng, n, dimV);
                if (rank_of(A, static_cast<std::size_t>(dimV)) < static_cast<std::size_t>(n)) continue;
                std::vector<Q> u(static_cast<std::size_t>(dimV));
                if (k % 2 == 0) {
                    for (const auto& row : A) {
                        const Q c = random_q(rng);
                        for (std::size_t i = 0; i < u.size(); ++i) u[i] += c * row[i];
                    }
                } else {
                    for (auto& v : u) v = random_q(rng);
                }
                auto with_u = A;
                with_u.push_back(u);
                const bool inside = rank_of(with_u, static_cast<std::size_t>(dimV)) == static_cast<std::size_t>(n);
                const auto z = raw_plucker(P, A);
                bool all_zero = true;
                for (const auto& l : linear_conditions<Q>(P, {u})) {
                    EXPECT_LE(l.degree(), 1);
                    all_zero = all_zero && l.evaluate(z).is_zero();
                }
                EXPECT_EQ(all_zero, inside);
            }
        }
}

TEST(Quadrics, VanishOnDecomposablePoints) {
    std::mt19937_64 rng(83);
    for (int n = 1; n <= 3; ++n)
        for (int dimV = n; dimV <= 5; ++dimV) {
            const PluckerIndex P(n, dimV);
            const auto quads = plucker_quadrics<Q>(P);
            for (const auto& q : quads) EXPECT_EQ(q.degree(), 2);
            for (int k = 0; k < 5; ++k) {
                const auto z = raw_plucker(P, random_rows(rng, n, dimV));
                for (const auto& q : quads) EXPECT_TRUE(q.evaluate(z).is_zero());
            }
        }
    const PluckerIndex G24(2, 4);
    std::vector<Q> z(G24.size());
    z[G24.index({0, 1})] = Q(1L);
    z[G24.index({2, 3})] = Q(1L);
    bool all_zero = true;
    for (const auto& q : plucker_quadrics<Q>(G24)) all_zero = all_zero && q.evaluate(z).is_zero();
    EXPECT_FALSE(all_zero);
}

TEST(PluckerPoint, CoordinatePoint) {
    const auto Z = parse_ideal<Q>("x1\nx2", 2);
    const auto z = plucker_point_of_subscheme(Z, 2, 5);
    const auto basis = monomials_of_degree(2, 2);
    std::size_t missing = 0;
    while (basis[missing] != Monomial({2, 0, 0})) ++missing;
    const PluckerIndex P(5, 6);
    for (std::size_t k = 0; k < P.size(); ++k) {
        const auto& a = P.tuple(k);
        const bool avoids = std::find(a.begin(), a.end(), static_cast<int>(missing)) == a.end();
        EXPECT_EQ(!z[k].is_zero(), avoids);
    }
    EXPECT_THROW(plucker_point_of_subscheme(Z, 2, 4), WrongDimension);
}

TEST(PluckerPoint, LineInP1) {
    const auto z = plucker_point_of_subscheme(parse_ideal<Q>("x0", 1), 1);
    EXPECT_EQ(z, (std::vector<Q>{Q(1L), Q(0L)}));
}

TEST(PluckerPoint, InvariantUnderBasisChange) {
    std::mt19937_64 rng(89);
    const PluckerIndex P(3, 5);
    for (int k = 0; k < 20; ++k) {
        const auto A = random_rows(rng, 3, 5);
        if (rank_of(A, 5) < 3) continue;
        auto T = random_rows(rng, 3, 3);
        if (rank_of(T, 3) < 3) continue;
        std::vector<std::vector<Q>> B(3, std::vector<Q>(5));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t c = 0; c < 5; ++c) B[i][c] += T[i][j] * A[j][c];
        EXPECT_EQ(plucker_coordinates(P, A), plucker_coordinates(P, B));
    }
}

TEST(HilbEquationsTest, TwoPointsOnTheLineHaveNoEquations) {
    const auto H = hilb_equations<Q>(1, 2, HilbertPolynomial::constant(2), std::nullopt);
    EXPECT_EQ(H.n, 1);
    EXPECT_EQ(H.m, 3);
    EXPECT_TRUE(H.minors_enumerated);
    EXPECT_TRUE(H.fitting_minors.empty());
    EXPECT_TRUE(H.linear_conditions.empty());
    FittingOptions raw;
    raw.dedup = ColumnDedup::none;
    std::vector<Matrix<Q>> u{multiplication_matrix<Q>(1, 2, 0), multiplication_matrix<Q>(1, 2, 1)};
    const auto sys = fitting_system(PluckerIndex(1, 3), u, 3, raw);
    std::size_t seen = 0;
    sys.visit_minors(1'000'000, [&](const auto&, const auto&, const Polynomial<Q>& p) {
        ++seen;
        EXPECT_TRUE(p.is_zero());
    });
    EXPECT_GT(seen, 0u);
}

TEST(HilbEquationsTest, ConicCoordinatePoints) {
    const auto X = parse_ideal<Q>("x0*x2 - x1^2", 2);
    const auto H = hilb_equations<Q>(2, 2, HilbertPolynomial::constant(1), X);
    EXPECT_EQ(H.n, 5);
    EXPECT_EQ(H.m, 10);
    EXPECT_TRUE(H.fitting.entries_linear());
    for (const auto& p : H.fitting.sample(10, 3))
        if (!p.is_zero()) {
            EXPECT_EQ(p.degree(), H.m);
        }
    for (const auto& l : H.linear_conditions) EXPECT_EQ(l.degree(), 1);
    for (std::size_t k = 0; k < H.basis_v.size(); ++k) {
        const auto c = H.check(plucker_coordinates(H.index, all_but(6, k)));
        const auto& w = H.basis_v[k];
        const bool pure = w.pure_power_variable() >= 0;
        EXPECT_TRUE(c.quadrics);
        EXPECT_EQ(c.fitting, pure) << w.to_string();
        EXPECT_EQ(c.linear, w != Monomial({0, 2, 0}) && w != Monomial({1, 0, 1})) << w.to_string();
        EXPECT_EQ(c.accepted(), w == Monomial({2, 0, 0}) || w == Monomial({0, 0, 2})) << w.to_string();
    }
}

TEST(HilbEquationsTest, GenuineSubschemesAreAccepted) {
    const auto X = parse_ideal<Q>("x0*x2 - x1^2", 2);
    const auto H = hilb_equations<Q>(2, 2, HilbertPolynomial::constant(1), X);
    const auto on = H.check(plucker_point_of_subscheme(parse_ideal<Q>("2*x0 - x1\n2*x1 - x2", 2), 2, 5));
    EXPECT_TRUE(on.accepted());
    const auto off = H.check(plucker_point_of_subscheme(parse_ideal<Q>("x0 - x2\nx1", 2), 2, 5));
    EXPECT_TRUE(off.quadrics);
    EXPECT_TRUE(off.fitting);
    EXPECT_FALSE(off.linear);
}

TEST(HilbEquationsTest, Preconditions) {
    const auto X = parse_ideal<Q>("x0*x2 - x1^2", 2);
    EXPECT_THROW(hilb_equations<Q>(2, 1, HilbertPolynomial::constant(1), X), InputError);
    HilbOptions o;
    o.allow_small_t = true;
    const auto H = hilb_equations<Q>(2, 1, HilbertPolynomial::constant(1), X, o);
    EXPECT_EQ(H.warnings.size(), 1u);
    EXPECT_THROW(hilb_equations<Q>(2, 4, HilbertPolynomial::constant(1), X), ScaleExceeded);
}

TEST(Export, RoundTrip) {
    const auto X = parse_ideal<Q>("x0*x2 - x1^2", 2);
    const auto H = hilb_equations<Q>(2, 2, HilbertPolynomial::constant(1), X);
    std::vector<Polynomial<Q>> all = H.plucker_quadrics;
    all.insert(all.end(), H.linear_conditions.begin(), H.linear_conditions.end());
    for (const auto& p : H.fitting.sample(3, 5))
        if (!p.is_zero()) all.push_back(p);
    std::string text;
    for (const auto& p : all) text += export_line(p, H.index) + "\n";
    const auto back = read_equations<Q>(text, H.index);
    ASSERT_EQ(back.size(), all.size());
    for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(back[k].monic(), all[k].monic());
}
