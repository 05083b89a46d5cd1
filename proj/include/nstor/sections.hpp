#pragma once

// Exact dim of global sections of the sheaf attached to R/I (or to a monomial
// submodule (m)/I), via degree-0 homomorphisms from powers of the irrelevant
// ideal, computed until two consecutive degrees agree.

#include "nstor/errors.hpp"
#include "nstor/groebner.hpp"
#include "nstor/hilbert.hpp"
#include "nstor/linalg.hpp"
#include "nstor/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace nstor {

struct SectionOptions {
    int t_max = 24;
};

struct SectionResult {
    long value = 0;
    int threshold = 0;                                  // first probed degree
    std::vector<std::pair<int, long>> probes;      // (t, dim Hom(.., ..)_0)
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), zero_(n, false) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        zero_[a] = zero_[a] || zero_[b];
    }
    void mark_zero(std::size_t a) { zero_[find(a)] = true; }

    std::size_t free_components() {
        std::size_t out = 0;
        for (std::size_t x = 0; x < parent_.size(); ++x)
            if (find(x) == x && !zero_[x]) ++out;
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<bool> zero_;
};

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

inline MonomialIndex index_of(const std::vector<Monomial>& ms) {
    MonomialIndex out;
    out.reserve(ms.size() * 2);
    for (std::size_t k = 0; k < ms.size(); ++k) out.emplace(ms[k], k);
    return out;
}

/// Monomials of degree t divisible by m and outside I.
inline std::vector<Monomial> module_basis(const Monomial& m, const MonomialIdeal& I, int t) {
    std::vector<Monomial> out;
    if (t < m.degree()) return out;
    for (const auto& q : monomials_of_degree(m.r(), t - m.degree())) {
        Monomial v = q * m;
        if (!I.contains(v)) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), OrderGreater{});
    return out;
}

/// dim Hom(m^t, (m)/I)_0 where m^t here is the t-th power of the irrelevant ideal.
///
/// With phi(u) = sum_v c[u,v] v every exchange relation
/// x_i phi(w/x_i) = x_j phi(w/x_j) compares single coefficients, so the solution
/// space is spanned by classes of a union-find that never meet a forced zero.
inline long hom_dimension_monomial(const Monomial& m, const MonomialIdeal& I, int t) {
    const int r = I.r();
    const auto U = monomials_of_degree(r, t);
    const auto B = module_basis(m, I, t);
    const auto B1 = module_basis(m, I, t + 1);
    if (B.empty()) return 0;
    const auto uidx = index_of(U);
    const auto bidx = index_of(B);
    const std::size_t nb = B.size();
    UnionFind uf(U.size() * nb);

    auto term = [&](const Monomial& w, int i, const Monomial& s) -> std::ptrdiff_t {
        if (s[i] == 0) return -1;
        const auto bv = bidx.find(s.times_variable(i, -1));
        if (bv == bidx.end()) return -1;
        const std::size_t u = uidx.at(w.times_variable(i, -1));
        return static_cast<std::ptrdiff_t>(u * nb + bv->second);
    };

    std::vector<int> vars;
    for (const auto& w : monomials_of_degree(r, t + 1)) {
        vars.clear();
        for (int i = 0; i <= r; ++i)
            if (w[i] > 0) vars.push_back(i);
        for (std::size_t k = 0; k + 1 < vars.size(); ++k) {
            const int i = vars[k];
            const int j = vars[k + 1];
            for (const auto& s : B1) {
                const auto a = term(w, i, s);
                const auto b = term(w, j, s);
                if (a >= 0 && b >= 0)
                    uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
                else if (a >= 0)
                    uf.mark_zero(static_cast<std::size_t>(a));
                else if (b >= 0)
                    uf.mark_zero(static_cast<std::size_t>(b));
            }
        }
    }
    return static_cast<long>(uf.free_components());
}

template <typename Probe>
SectionResult stabilize(int threshold, const SectionOptions& options, Probe&& probe) {
    SectionResult out;
    out.threshold = threshold;
    long prev = probe(threshold);
    out.probes.emplace_back(threshold, prev);
    for (int t = threshold + 1; t <= options.t_max; ++t) {
        const long cur = probe(t);
        out.probes.emplace_back(t, cur);
        if (cur == prev) {
            out.value = cur;
            return out;
        }
        prev = cur;
    }
    const long before = out.probes.size() >= 2 ? out.probes[out.probes.size() - 2].second : prev;
    throw StabilizationCapExceeded("section dimension did not stabilize by t = " + std::to_string(options.t_max), before,
                                   prev);
}

inline int numerator_degree(const MonomialIdeal& I) {
    return std::max(0, hilbert_series_numerator_recursive(I).degree());
}

}  // namespace detail

/// dim Gamma(P^r, sheaf of (m)/(I cap (m))) for monomial data.
inline SectionResult gamma_exact_submodule(const Monomial& m, const MonomialIdeal& I, const SectionOptions& options = {}) {
    if (m.r() != I.r()) throw DimensionMismatch("shift monomial and ideal live in different rings");
    if (I.contains(m)) {
        SectionResult zero;
        zero.probes.emplace_back(0, 0);
        return zero;
    }
    // (m)/(I cap (m)) is R/(I : m) shifted by deg m
    const MonomialIdeal colon = I.colon(m);
    const int threshold = std::max({1, colon.d() + m.degree(), detail::numerator_degree(colon) + m.degree()});
    return detail::stabilize(threshold, options, [&](int t) { return detail::hom_dimension_monomial(m, I, t); });
}

inline SectionResult gamma_exact(const MonomialIdeal& I, const SectionOptions& options = {}) {
    return gamma_exact_submodule(Monomial::one(I.r()), I, options);
}

/// Same dimension through the cofinal system J_t = (x_0^t, ..., x_r^t):
/// unknowns phi_i in (R/I)_t, Koszul relations x_j^t phi_i = x_i^t phi_j in (R/I)_{2t}.
template <Field F>
SectionResult gamma_exact_koszul(const IdealPresentation<F>& I, const SectionOptions& options = {},
                                 const GroebnerOptions& gb_options = {}) {
    const int r = I.r;
    const auto gb = buchberger(I, MonomialOrder::grevlex, gb_options);
    const MonomialIdeal in = gb.initial_ideal();
    if (in.is_unit()) {
        SectionResult zero;
        zero.probes.emplace_back(0, 0);
        return zero;
    }
    detail::Reducer<F> red{MonomialOrder::grevlex, {}, {}, {}};
    for (const auto& g : gb.elements) red.add(g);

    auto probe = [&](int t) -> long {
        const auto Bt = in.standard_monomials(t);
        const auto B2t = in.standard_monomials(2 * t);
        if (Bt.empty()) return 0;
        const auto idx2 = detail::index_of(B2t);
        const std::size_t nt = Bt.size();
        const std::size_t n2 = B2t.size();
        // images[j][v] = normal form of x_j^t * v as a dense vector over B_{2t}
        std::vector<std::vector<std::vector<F>>> images(static_cast<std::size_t>(r) + 1);
        for (int j = 0; j <= r; ++j) {
            auto& img = images[static_cast<std::size_t>(j)];
            img.resize(nt);
            for (std::size_t v = 0; v < nt; ++v) {
                img[v].assign(n2, F());
                const auto nf = red.reduce(Polynomial<F>::monomial(Bt[v].times_variable(j, t)));
                for (const auto& [mono, c] : nf.terms()) img[v][idx2.at(mono)] = c;
            }
        }
        const std::size_t unknowns = (static_cast<std::size_t>(r) + 1) * nt;
        Matrix<F> A(0, unknowns);
        for (int i = 0; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j)
                for (std::size_t row = 0; row < n2; ++row) {
                    std::vector<F> eq(unknowns);
                    bool any = false;
                    for (std::size_t v = 0; v < nt; ++v) {
                        // x_j^t phi_i - x_i^t phi_j
                        const F a = images[static_cast<std::size_t>(j)][v][row];
                        const F b = images[static_cast<std::size_t>(i)][v][row];
                        if (!a.is_zero()) {
                            eq[static_cast<std::size_t>(i) * nt + v] = a;
                            any = true;
                        }
                        if (!b.is_zero()) {
                            eq[static_cast<std::size_t>(j) * nt + v] = -b;
                            any = true;
                        }
                    }
                    if (any) A.append_row(eq);
                }
        return static_cast<long>(unknowns - rank(A));
    };
    const int threshold = std::max({1, in.d(), detail::numerator_degree(in)});
    return detail::stabilize(threshold, options, probe);
}

/// Monomial inputs use the exchange-relation system; others the Koszul route.
template <Field F>
SectionResult gamma_exact(const IdealPresentation<F>& I, const SectionOptions& options = {},
                          const GroebnerOptions& gb_options = {}) {
    if (I.is_monomial()) return gamma_exact(MonomialIdeal::from_presentation(I), options);
    return gamma_exact_koszul(I, options, gb_options);
}

}  // namespace nstor
