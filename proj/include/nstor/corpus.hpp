#pragma once

// Seeded random instances for property suites and the corpus audit.
//
// All draws come from std::mt19937_64 through uniform_below, which rejects
// the top partial block, so a seed produces the same corpus on every standard
// library.

#include "nstor/field.hpp"
#include "nstor/mono_gamma.hpp"
#include "nstor/monomial_ideal.hpp"
#include "nstor/polynomial.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nstor {

/// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InputError("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Random monomial of the given degree: each unit of degree lands on a uniform variable.
inline Monomial random_monomial(std::mt19937_64& rng, int r, int degree) {
    std::vector<int> e(static_cast<std::size_t>(r) + 1, 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(uniform_int(rng, 0, r))];
    return Monomial(std::move(e));
}

struct MonomialCorpusOptions {
    int r_min = 1;
    int r_max = 3;
    int d_max = 4;
    int max_generators = 4;
};

/// Nonzero proper monomial ideal with generators of degree 1..d_max.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const MonomialCorpusOptions& o) {
    const int r = uniform_int(rng, o.r_min, o.r_max);
    const int count = uniform_int(rng, 1, o.max_generators);
    std::vector<Monomial> gens;
    for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, r, uniform_int(rng, 1, o.d_max)));
    return MonomialIdeal(r, std::move(gens));
}

/// Random module presentation (m, I, d) whose ideal has a generator in two or more variables.
inline ModulePresentation random_split_instance(std::mt19937_64& rng, const MonomialCorpusOptions& o) {
    for (;;) {
        const MonomialIdeal I = random_monomial_ideal(rng, o);
        if (I.mu() <= 0) continue;
        const int d = std::max(I.d(), uniform_int(rng, 1, o.d_max));
        std::vector<int> e(static_cast<std::size_t>(I.r()) + 1);
        for (auto& v : e) v = uniform_int(rng, 0, std::min(d, 1));
        return ModulePresentation(Monomial(std::move(e)), I, d);
    }
}

struct PolynomialCorpusOptions {
    int r_min = 1;
    int r_max = 2;
    int deg_max = 3;
    int max_generators = 3;
    int max_terms = 4;
};

/// Random homogeneous ideal: each generator a sum of up to max_terms monomials of one degree with nonzero coefficients.
template <Field F>
IdealPresentation<F> random_homogeneous_ideal(std::mt19937_64& rng, const PolynomialCorpusOptions& o,
                                              std::uint64_t modulus = 32003) {
    const int r = uniform_int(rng, o.r_min, o.r_max);
    const int count = uniform_int(rng, 1, o.max_generators);
    std::vector<Polynomial<F>> gens;
    while (static_cast<int>(gens.size()) < count) {
        const int deg = uniform_int(rng, 1, o.deg_max);
        const auto basis = monomials_of_degree(r, deg);
        const int terms = uniform_int(rng, 1, o.max_terms);
        std::vector<typename Polynomial<F>::Term> ts;
        for (int k = 0; k < terms; ++k) {
            const auto& m = basis[uniform_below(rng, basis.size())];
            const long c = 1 + static_cast<long>(uniform_below(rng, modulus - 1));
            ts.emplace_back(m, F(c));
        }
        Polynomial<F> p(r, std::move(ts));
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    return IdealPresentation<F>::from(r, std::move(gens));
}

struct CorpusAuditOptions {
    std::uint64_t seed = 0;
    int count = 200;
    int r_max = 3;
    int d_max = 4;
    SectionOptions sections;
};

struct CorpusAuditEntry {
    std::string source;  // "documented" or "random#k"
    ModulePresentation instance;
    GammaAudit audit;
};

struct CorpusAuditReport {
    CorpusAuditOptions options;
    std::vector<CorpusAuditEntry> entries;
    std::size_t bound_violations = 0;     // exact > recursion bound
    std::size_t d_pow_r_violations = 0;   // exact > d^r
    std::size_t majorant_violations = 0;  // node-level comparisons against #M/d
    std::size_t skipped = 0;              // stabilization cap hit
};

/// The instance (x0^2, (x1), d = 3) in P^1.
inline ModulePresentation documented_majorant_instance() {
    return ModulePresentation(Monomial({2, 0}), MonomialIdeal(1, {Monomial({0, 1})}), 3);
}

/// Recursion bound against the exact oracle, with every node's #M/d majorant audited.
inline CorpusAuditReport corpus_audit(const CorpusAuditOptions& options) {
    CorpusAuditReport out;
    out.options = options;
    auto record = [&](std::string source, const ModulePresentation& p) {
        GammaAudit a;
        try {
            a = gamma_audit(p, options.sections);
        } catch (const StabilizationCapExceeded&) {
            ++out.skipped;
            return;
        }
        if (!a.exact_le_leaf_sum) ++out.bound_violations;
        if (!a.exact_le_d_pow_r) ++out.d_pow_r_violations;
        out.majorant_violations += a.violations.size();
        out.entries.push_back({std::move(source), p, std::move(a)});
    };
    record("documented", documented_majorant_instance());
    std::mt19937_64 rng(options.seed);
    MonomialCorpusOptions mo;
    mo.r_max = options.r_max;
    mo.d_max = options.d_max;
    for (int k = 0; k < options.count; ++k)
        record("random#" + std::to_string(k), ModulePresentation::of_ideal(random_monomial_ideal(rng, mo)));
    return out;
}

}  // namespace nstor
