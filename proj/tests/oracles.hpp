#pragma once

// Brute-force reference computations shared by the suites. None of these go
// through Groebner bases, Hilbert series or the section solver.

#include "nstor/linalg.hpp"
#include "nstor/monomial_ideal.hpp"
#include "nstor/polynomial.hpp"

#include <map>
#include <vector>

namespace oracle {

using nstor::Monomial;

/// Exponent vectors of degree t in r+1 variables, generated independently of monomials_of_degree.
inline std::vector<std::vector<int>> exponent_vectors(int r, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<std::size_t>(r) + 1, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == r) {
            e[static_cast<std::size_t>(i)] = left;
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, t);
    return out;
}

inline bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Degree-t monomials outside the monomial ideal, by divisibility testing against every generator.
inline long standard_count(const nstor::MonomialIdeal& I, int t) {
    long n = 0;
    for (const auto& e : exponent_vectors(I.r(), t)) {
        bool inside = false;
        for (const auto& g : I.generators()) {
            std::vector<int> ge(g.exponents().begin(), g.exponents().end());
            if (divides(ge, e)) inside = true;
        }
        if (!inside) ++n;
    }
    return n;
}

/// dim (R/I)_t = dim R_t - rank of all degree-t multiples of the generators.
template <nstor::Field F>
long hilbert_function(const nstor::IdealPresentation<F>& I, int t) {
    const auto cols = exponent_vectors(I.r, t);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;
    nstor::Matrix<F> A(0, cols.size());
    for (const auto& g : I.generators) {
        const int dg = g.degree();
        if (dg > t) continue;
        for (const auto& q : exponent_vectors(I.r, t - dg)) {
            std::vector<F> row(cols.size());
            for (const auto& [m, c] : g.terms()) {
                std::vector<int> e(m.exponents().begin(), m.exponents().end());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += q[i];
                row[index.at(e)] = c;
            }
            A.append_row(row);
        }
    }
    return static_cast<long>(cols.size()) - static_cast<long>(A.rows() == 0 ? 0 : nstor::rank(A));
}

/// Laplace expansion along the first row.
template <nstor::Field F>
F determinant(const std::vector<std::vector<F>>& M) {
    const std::size_t n = M.size();
    if (n == 0) return F(1L);
    F out;
    for (std::size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        std::vector<std::vector<F>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<F> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(M[i][k]);
            sub.push_back(row);
        }
        const F term = M[0][j] * determinant(sub);
        out = (j % 2 == 0) ? out + term : out - term;
    }
    return out;
}

}  // namespace oracle
