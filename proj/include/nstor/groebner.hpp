#pragma once

// Buchberger's algorithm (normal strategy), reduced bases, initial ideals,
// and the degree bound for initial-ideal generators.

#include "nstor/bigint.hpp"
#include "nstor/errors.hpp"
#include "nstor/monomial_ideal.hpp"
#include "nstor/polynomial.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace nstor {

struct GroebnerOptions {
    /// Largest S-pair degree processed before giving up.
    int degree_cap = 64;
};

template <Field F>
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex;
    std::vector<Polynomial<F>> elements;  // monic, reduced, sorted by leading monomial (descending)
    IdealPresentation<F> source;

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(elements.size());
        for (const auto& g : elements) out.push_back(g.leading_term(order).first);
        return out;
    }

    MonomialIdeal initial_ideal() const { return MonomialIdeal(source.r, leading_monomials()); }

    Polynomial<F> normal_form(const Polynomial<F>& f) const;

    bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }
};

namespace detail {

template <Field F>
struct Reducer {
    MonomialOrder order;
    std::vector<const Polynomial<F>*> basis;
    std::vector<Monomial> lms;
    std::vector<F> lc_inverses;

    void add(const Polynomial<F>& g) {
        const auto& lt = g.leading_term(order);
        basis.push_back(&g);
        lms.push_back(lt.first);
        lc_inverses.push_back(lt.second.inverse());
    }

    /// Full reduction: no monomial of the result is divisible by a leading monomial.
    Polynomial<F> reduce(Polynomial<F> p, std::size_t skip = static_cast<std::size_t>(-1)) const {
        const int r = p.r();
        std::vector<typename Polynomial<F>::Term> rest;
        while (!p.is_zero()) {
            const auto lt = p.leading_term(order);
            bool reduced = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (k == skip || !lms[k].divides(lt.first)) continue;
                const Monomial q = lms[k].quotient_of(lt.first);
                p = p - basis[k]->times_monomial(q).scaled(lt.second * lc_inverses[k]);
                reduced = true;
                break;
            }
            if (!reduced) {
                rest.push_back(lt);
                p = p - Polynomial<F>::monomial(lt.first, lt.second);
            }
        }
        return Polynomial<F>(r, std::move(rest));
    }
};

}  // namespace detail

template <Field F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& f) const {
    detail::Reducer<F> red{order, {}, {}, {}};
    for (const auto& g : elements) red.add(g);
    return red.reduce(f);
}

template <Field F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, MonomialOrder order) {
    const auto& [mf, cf] = f.leading_term(order);
    const auto& [mg, cg] = g.leading_term(order);
    const Monomial l = lcm(mf, mg);
    return f.times_monomial(mf.quotient_of(l)).scaled(cf.inverse()) -
           g.times_monomial(mg.quotient_of(l)).scaled(cg.inverse());
}

/// Reduced Groebner basis of a homogeneous ideal.
template <Field F>
GroebnerBasis<F> buchberger(const IdealPresentation<F>& I, MonomialOrder order, const GroebnerOptions& options = {}) {
    for (const auto& g : I.generators) {
        if (g.is_zero()) throw InputError("zero generator");
        if (!g.is_homogeneous()) throw InputError("generator " + g.to_string() + " is not homogeneous");
        if (g.r() != I.r) throw DimensionMismatch("generator outside the ambient ring");
    }

    std::vector<Polynomial<F>> G;
    G.reserve(I.generators.size() * 4);
    std::vector<Monomial> lm;
    {
        // seed with inter-reduced inputs so trivial redundancy never enters the pair queue
        detail::Reducer<F> red{order, {}, {}, {}};
        std::vector<Polynomial<F>> sorted = I.generators;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
        std::vector<Polynomial<F>> kept;
        kept.reserve(sorted.size());
        for (const auto& g : sorted) {
            detail::Reducer<F> cur{order, {}, {}, {}};
            for (const auto& k : kept) cur.add(k);
            Polynomial<F> h = cur.reduce(g);
            if (!h.is_zero()) kept.push_back(h.monic(order));
        }
        G = std::move(kept);
    }
    for (const auto& g : G) lm.push_back(g.leading_term(order).first);

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

    auto pair_key = [&](const Pair& p) {
        const Monomial l = lcm(lm[p.first], lm[p.second]);
        return l;
    };

    while (!pending.empty()) {
        // normal strategy: smallest lcm (degree first), ties broken by the order, then indices
        auto best = pending.begin();
        Monomial best_l = pair_key(*best);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            const Monomial l = pair_key(*it);
            if (l.degree() < best_l.degree() || (l.degree() == best_l.degree() && compare(order, l, best_l) < 0)) {
                best = it;
                best_l = l;
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        if (lm[i].coprime(lm[j])) continue;
        if (best_l.degree() > options.degree_cap)
            throw DegreeCapExceeded("S-pair degree " + std::to_string(best_l.degree()) + " exceeds the cap " +
                                    std::to_string(options.degree_cap));
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j || !lm[k].divides(best_l)) continue;
            const Pair ik{std::min(i, k), std::max(i, k)};
            const Pair jk{std::min(j, k), std::max(j, k)};
            chain = !pending.contains(ik) && !pending.contains(jk);
        }
        if (chain) continue;

        detail::Reducer<F> red{order, {}, {}, {}};
        for (const auto& g : G) red.add(g);
        Polynomial<F> h = red.reduce(s_polynomial(G[i], G[j], order));
        if (h.is_zero()) continue;
        h = h.monic(order);
        G.push_back(std::move(h));
        lm.push_back(G.back().leading_term(order).first);
        const std::size_t n = G.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // minimalize
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < G.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
            if (a == b || !lm[b].divides(lm[a])) continue;
            redundant = lm[b] != lm[a] || b < a;
        }
        if (!redundant) keep.push_back(a);
    }
    std::vector<Polynomial<F>> minimal;
    for (auto a : keep) minimal.push_back(G[a]);

    // inter-reduce
    std::vector<Polynomial<F>> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        detail::Reducer<F> red{order, {}, {}, {}};
        for (const auto& g : minimal) red.add(g);
        reduced.push_back(red.reduce(minimal[a], a).monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [order](const auto& a, const auto& b) {
        return compare(order, a.leading_term(order).first, b.leading_term(order).first) > 0;
    });
    return GroebnerBasis<F>{order, std::move(reduced), I};
}

template <Field F>
MonomialIdeal initial_ideal(const IdealPresentation<F>& I, MonomialOrder order, const GroebnerOptions& options = {}) {
    if (I.is_monomial()) return MonomialIdeal::from_presentation(I);
    return buchberger(I, order, options).initial_ideal();
}

/// Basis of (R/I)_t: standard monomials of a grevlex Groebner basis.
template <Field F>
std::vector<Monomial> graded_piece_basis(const IdealPresentation<F>& I, int t, const GroebnerOptions& options = {}) {
    if (t < 0) throw InputError("degree must be nonnegative");
    return initial_ideal(I, MonomialOrder::grevlex, options).standard_monomials(t);
}

inline std::vector<Monomial> graded_piece_basis(const MonomialIdeal& I, int t) {
    if (t < 0) throw InputError("degree must be nonnegative");
    return I.standard_monomials(t);
}

/// ceil(2 (d^2/2 + d)^(2^(r-1))): degree bound for minimal generators of any initial ideal.
inline BigInt dube_bound(int d, int r) {
    if (d < 1 || r < 1) throw InputError("dube bound needs d >= 1 and r >= 1");
    if (r > 21) throw ScaleExceeded("exponent 2^(r-1) too large for exact evaluation");
    const BigRational base(BigInt(d) * d + 2 * BigInt(d), 2);
    const unsigned long e = 1ul << (r - 1);
    BigRational p(pow(base.get_num(), e), pow(base.get_den(), e));
    p.canonicalize();
    return ceil(BigRational(2 * p));
}

}  // namespace nstor
