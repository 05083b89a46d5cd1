#pragma once

// Recursive upper bound on dim Gamma for monomial modules (m)/I, by splitting
// on a generator that involves two or more variables until every generator is
// a pure power.

#include "nstor/bigint.hpp"
#include "nstor/errors.hpp"
#include "nstor/groebner.hpp"
#include "nstor/monomial_ideal.hpp"
#include "nstor/sections.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nstor {

/// The module (m)/(I cap (m)) together with the box parameter d.
struct ModulePresentation {
    Monomial m;
    MonomialIdeal I;
    int d;

    ModulePresentation(Monomial shift, MonomialIdeal ideal, int box) : m(std::move(shift)), I(std::move(ideal)), d(box) {
        if (m.r() != I.r()) throw DimensionMismatch("shift monomial and ideal live in different rings");
        if (d < 1) throw InputError("d must be at least 1");
        for (int i = 0; i <= m.r(); ++i)
            if (m[i] > d) throw InputError("exponent of " + m.to_string() + " exceeds d = " + std::to_string(d));
        for (const auto& g : I.generators())
            if (g.degree() > d) throw InputError("generator " + g.to_string() + " has degree above d = " + std::to_string(d));
    }

    /// m = 1 and d = max(1, largest generator degree).
    static ModulePresentation of_ideal(const MonomialIdeal& I) {
        return ModulePresentation(Monomial::one(I.r()), I, std::max(1, I.d()));
    }

    int r() const { return I.r(); }
};

inline int mu_monomial(const Monomial& m) { return m.mu(); }
inline int mu_ideal(const MonomialIdeal& I) { return I.mu(); }

/// Monomials divisible by m, outside I, with every exponent below d.
inline std::vector<Monomial> enumerate_M(const ModulePresentation& p) {
    std::vector<Monomial> out;
    const int r = p.r();
    std::vector<int> e(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        if (p.m[i] >= p.d) return out;
        e[static_cast<std::size_t>(i)] = p.m[i];
    }
    for (;;) {
        Monomial x(e);
        if (!p.I.contains(x)) out.push_back(std::move(x));
        int i = r;
        while (i >= 0 && ++e[static_cast<std::size_t>(i)] == p.d) {
            e[static_cast<std::size_t>(i)] = p.m[i];
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(), OrderGreater{});
    return out;
}

struct SplitChoice {
    Monomial generator;  // n'
    int variable;        // i
    int exponent;        // s
};

/// grevlex-largest generator with mu > 0; within it the smallest variable index.
inline SplitChoice choose_split(const MonomialIdeal& I) {
    for (const auto& g : I.generators()) {
        if (g.mu() <= 0) continue;
        for (int i = 0; i <= g.r(); ++i)
            if (g[i] > 0) return {g, i, g[i]};
    }
    throw NoSplittableGenerator("every generator of " + I.to_string() + " involves at most one variable");
}

inline std::pair<ModulePresentation, ModulePresentation> split_step(const ModulePresentation& p, const SplitChoice& c) {
    const int r = p.r();
    const Monomial xs = Monomial::variable(r, c.variable, c.exponent);
    const Monomial n = xs.quotient_of(c.generator);
    std::vector<Monomial> J;
    for (const auto& g : p.I.generators())
        if (g != c.generator) J.push_back(g);
    std::vector<Monomial> gens0 = J;
    gens0.push_back(n);
    std::vector<Monomial> gens1 = J;
    gens1.push_back(xs);
    return {ModulePresentation(lcm(xs, p.m), MonomialIdeal(r, gens0), p.d),
            ModulePresentation(p.m, MonomialIdeal(r, gens1), p.d)};
}

inline std::pair<ModulePresentation, ModulePresentation> split_step(const ModulePresentation& p) {
    if (p.I.mu() <= 0)
        throw NoSplittableGenerator("mu(" + p.I.to_string() + ") = " + std::to_string(p.I.mu()) + " is not positive");
    return split_step(p, choose_split(p.I));
}

struct GammaTrace {
    enum class Kind { unit_ideal, shift_in_ideal, base_case, split };

    Kind kind = Kind::split;
    std::string path;
    Monomial m;
    MonomialIdeal I;
    int d = 1;
    long m_count = 0;  // #M(m, I)
    int mu = 0;
    BigInt leaf_sum = 0;
    BigRational majorant;  // #M / d

    // base case: pure powers x_{vars[k]}^{b[k]}, a[k] = exponent of m there
    std::vector<int> vars, b, a;
    // split node
    std::optional<SplitChoice> choice;
    std::vector<GammaTrace> children;

    GammaTrace(Monomial shift, MonomialIdeal ideal) : m(std::move(shift)), I(std::move(ideal)) {}

    static std::string kind_name(Kind k) {
        switch (k) {
            case Kind::unit_ideal: return "unit-ideal";
            case Kind::shift_in_ideal: return "shift-in-ideal";
            case Kind::base_case: return "base-case";
            case Kind::split: return "split";
        }
        return "?";
    }

    std::size_t node_count() const {
        std::size_t n = 1;
        for (const auto& c : children) n += c.node_count();
        return n;
    }

    int depth() const {
        int out = 0;
        for (const auto& c : children) out = std::max(out, 1 + c.depth());
        return out;
    }

    template <typename Visit>
    void visit(Visit&& f) const {
        f(*this);
        for (const auto& c : children) c.visit(f);
    }
};

namespace detail {

inline GammaTrace gamma_recurse(const ModulePresentation& p, const std::string& path) {
    GammaTrace node(p.m, p.I);
    node.path = path;
    node.d = p.d;
    node.mu = p.I.mu();
    node.m_count = static_cast<long>(enumerate_M(p).size());
    node.majorant = BigRational(node.m_count, p.d);
    node.majorant.canonicalize();

    if (p.I.is_unit()) {
        node.kind = GammaTrace::Kind::unit_ideal;
        return node;
    }
    if (p.I.contains(p.m)) {
        node.kind = GammaTrace::Kind::shift_in_ideal;
        return node;
    }
    if (node.mu <= 0) {
        node.kind = GammaTrace::Kind::base_case;
        const int r = p.r();
        for (const auto& g : p.I.generators()) {
            const int v = g.pure_power_variable();
            node.vars.push_back(v);
            node.b.push_back(g[v]);
            node.a.push_back(p.m[v]);
        }
        const int n = static_cast<int>(node.vars.size());
        if (n == r + 1) {
            node.leaf_sum = 0;
        } else if (n == r) {
            BigInt prod = 1;
            for (std::size_t k = 0; k < node.b.size(); ++k) prod *= node.b[k] - node.a[k];
            node.leaf_sum = prod;
        } else {
            node.leaf_sum = 1;
        }
        return node;
    }
    node.kind = GammaTrace::Kind::split;
    const SplitChoice c = choose_split(p.I);
    node.choice = c;
    auto [c0, c1] = split_step(p, c);
    node.children.push_back(gamma_recurse(c0, path + "/0"));
    node.children.push_back(gamma_recurse(c1, path + "/1"));
    node.leaf_sum = node.children[0].leaf_sum + node.children[1].leaf_sum;
    return node;
}

}  // namespace detail

struct GammaBound {
    BigInt bound;
    GammaTrace trace;
};

inline GammaBound gamma_upper_bound(const ModulePresentation& p) {
    GammaTrace trace = detail::gamma_recurse(p, "");
    BigInt bound = trace.leaf_sum;
    return {std::move(bound), std::move(trace)};
}

struct MonomialGammaBound {
    BigInt bound;
    BigInt d_pow_r;
    int d;
    GammaTrace trace;
};

inline MonomialGammaBound gamma_bound_monomial(const MonomialIdeal& I) {
    const auto p = ModulePresentation::of_ideal(I);
    auto [bound, trace] = gamma_upper_bound(p);
    return {bound, pow(BigInt(p.d), static_cast<unsigned long>(I.r())), p.d, std::move(trace)};
}

/// ceil(2^r (d^2/2 + d)^(r 2^(r-1))): bound on dim Gamma for any ideal generated in degree <= d.
inline BigInt gamma_closed_form(int d, int r) {
    if (d < 1 || r < 1) throw InputError("closed form needs d >= 1 and r >= 1");
    if (r > 16) throw ScaleExceeded("exponent r 2^(r-1) too large for exact evaluation");
    const unsigned long e = static_cast<unsigned long>(r) << (r - 1);
    const BigInt num = BigInt(d) * d + 2 * BigInt(d);
    BigRational v(pow(BigInt(2), static_cast<unsigned long>(r)) * pow(num, e), pow(BigInt(2), e));
    v.canonicalize();
    return ceil(v);
}

struct GeneralGammaReport {
    MonomialIdeal initial;
    int input_d;
    MonomialGammaBound sharp;  // recursion on the initial ideal with its own degree
    BigInt closed_form;        // from the input d and r
};

template <Field F>
GeneralGammaReport gamma_bound_general(const IdealPresentation<F>& I, MonomialOrder order,
                                          const GroebnerOptions& options = {}) {
    MonomialIdeal in = initial_ideal(I, order, options);
    const int d = std::max(1, I.d());
    auto sharp = gamma_bound_monomial(in);
    return {std::move(in), d, std::move(sharp), gamma_closed_form(d, std::max(1, I.r))};
}

/// One recorded comparison that the recursion's majorant did not survive.
struct AuditViolation {
    std::string path;
    std::string kind;  // "leaf_sum>majorant" or "exact>majorant"
    BigInt value;
    BigRational majorant;
};

struct GammaAudit {
    long exact = 0;
    BigInt leaf_sum;
    BigRational majorant;
    BigInt d_pow_r;
    bool exact_le_leaf_sum = true;
    bool exact_le_d_pow_r = true;
    std::vector<AuditViolation> violations;
    std::size_t nodes = 0;
};

/// Evaluates, without asserting, leaf_sum <= #M/d and exact <= #M/d at every node,
/// and exact <= d^r at the root.
inline GammaAudit gamma_audit(const ModulePresentation& p, const SectionOptions& options = {}) {
    auto [bound, trace] = gamma_upper_bound(p);
    GammaAudit out;
    out.exact = gamma_exact_submodule(p.m, p.I, options).value;
    out.leaf_sum = bound;
    out.majorant = trace.majorant;
    out.d_pow_r = pow(BigInt(p.d), static_cast<unsigned long>(p.r()));
    out.exact_le_leaf_sum = BigInt(out.exact) <= bound;
    out.exact_le_d_pow_r = BigInt(out.exact) <= out.d_pow_r;
    out.nodes = trace.node_count();
    trace.visit([&](const GammaTrace& node) {
        if (BigRational(node.leaf_sum) > node.majorant)
            out.violations.push_back({node.path.empty() ? "/" : node.path, "leaf_sum>majorant", node.leaf_sum, node.majorant});
        const long ex = node.kind == GammaTrace::Kind::unit_ideal || node.kind == GammaTrace::Kind::shift_in_ideal
                                 ? 0
                                 : gamma_exact_submodule(node.m, node.I, options).value;
        if (BigRational(ex) > node.majorant)
            out.violations.push_back({node.path.empty() ? "/" : node.path, "exact>majorant", BigInt(ex), node.majorant});
    });
    return out;
}

}  // namespace nstor
