#pragma once

#include "nstor/monomial.hpp"
#include "nstor/polynomial.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace nstor {

/// Ideal generated by monomials, stored by its minimal generators.
///
/// Generators are kept sorted grevlex-descending. The unit ideal is stored
/// as the single generator 1; the zero ideal has no generators.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int r) : r_(r) {
        if (r < 0) throw InputError("r must be nonnegative");
    }

    MonomialIdeal(int r, const std::vector<Monomial>& generators) : r_(r) {
        if (r < 0) throw InputError("r must be nonnegative");
        for (const auto& g : generators)
            if (g.r() != r) throw DimensionMismatch("generator " + g.to_string() + " outside the ambient ring");
        gens_ = minimalize(generators);
    }

    static MonomialIdeal unit(int r) { return MonomialIdeal(r, {Monomial::one(r)}); }

    /// Leading monomials of a monomial presentation; throws if a generator has several terms.
    template <Field F>
    static MonomialIdeal from_presentation(const IdealPresentation<F>& I) {
        std::vector<Monomial> gens;
        for (const auto& g : I.generators) {
            if (!g.is_monomial()) throw InputError("generator " + g.to_string() + " is not a monomial");
            gens.push_back(g.terms().front().first);
        }
        return MonomialIdeal(I.r, gens);
    }

    int r() const { return r_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

    /// Largest generator degree (0 for the zero ideal).
    int d() const {
        int out = 0;
        for (const auto& g : gens_) out = std::max(out, g.degree());
        return out;
    }

    /// Sum of mu over minimal generators; -1 for the unit ideal.
    int mu() const {
        int out = 0;
        for (const auto& g : gens_) out += g.mu();
        return out;
    }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    /// True when every generator is a pure power x_i^b (b > 0).
    bool is_pure_power() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.pure_power_variable() >= 0; });
    }

    Monomial lcm_of_generators() const {
        Monomial out = Monomial::one(r_);
        for (const auto& g : gens_) out = lcm(out, g);
        return out;
    }

    MonomialIdeal operator+(const MonomialIdeal& other) const {
        if (other.r_ != r_) throw DimensionMismatch("ideals live in different rings");
        std::vector<Monomial> all = gens_;
        all.insert(all.end(), other.gens_.begin(), other.gens_.end());
        return MonomialIdeal(r_, all);
    }

    MonomialIdeal with(const Monomial& extra) const {
        std::vector<Monomial> all = gens_;
        all.push_back(extra);
        return MonomialIdeal(r_, all);
    }

    /// Ideal quotient I : (m), generated by g / gcd(g, m).
    MonomialIdeal colon(const Monomial& m) const {
        std::vector<Monomial> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(gcd(g, m).quotient_of(g));
        return MonomialIdeal(r_, out);
    }

    /// Monomials of degree t outside I, grevlex-descending.
    std::vector<Monomial> standard_monomials(int t) const {
        std::vector<Monomial> out;
        for (auto& m : monomials_of_degree(r_, t))
            if (!contains(m)) out.push_back(std::move(m));
        return out;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.r_ == b.r_ && a.gens_ == b.gens_; }

    std::string to_string() const {
        if (gens_.empty()) return "(0)";
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ", ";
            out += gens_[i].to_string();
        }
        return out + ")";
    }

    template <Field F>
    IdealPresentation<F> to_presentation() const {
        IdealPresentation<F> out{r_, {}};
        for (const auto& g : gens_) out.generators.push_back(Polynomial<F>::monomial(g));
        return out;
    }

private:
    static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        for (const auto& g : gens) {
            bool redundant = false;
            for (const auto& k : kept)
                if (k.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(g);
        }
        std::sort(kept.begin(), kept.end(), OrderGreater{});
        return kept;
    }

    int r_;
    std::vector<Monomial> gens_;
};

}  // namespace nstor
