#pragma once

#include "nstor/field.hpp"
#include "nstor/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nstor {

/// Sparse multivariate polynomial over F.
///
/// Terms are stored in graded-reverse-lex descending order regardless of the
/// order used by any algorithm, so printing is deterministic. No stored
/// coefficient is zero. Values are immutable once built.
template <Field F>
class Polynomial {
public:
    using Term = std::pair<Monomial, F>;

    explicit Polynomial(int r = 0) : r_(r) {}

    /// Builds from arbitrary terms: combines like monomials and drops zeros.
    Polynomial(int r, std::vector<Term> terms) : r_(r), terms_(std::move(terms)) {
        for (const auto& [m, c] : terms_)
            if (m.r() != r_) throw DimensionMismatch("term outside the ambient ring");
        normalize();
    }

    static Polynomial constant(int r, const F& c) { return Polynomial(r, {{Monomial::one(r), c}}); }
    static Polynomial monomial(const Monomial& m, const F& c = F(1L)) { return Polynomial(m.r(), {{m, c}}); }
    static Polynomial variable(int r, int i) { return monomial(Monomial::variable(r, i)); }

    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_homogeneous() const { return homogeneous_; }
    bool is_monomial() const { return terms_.size() == 1; }
    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : max_degree_; }

    F coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& x) { return OrderGreater{}(t.first, x); });
        if (it != terms_.end() && it->first == m) return it->second;
        return F();
    }

    /// Leading term under the given order (linear scan; storage order is fixed).
    const Term& leading_term(MonomialOrder order) const {
        if (terms_.empty()) throw InputError("leading term of the zero polynomial");
        if (order == MonomialOrder::grevlex) return terms_.front();
        const Term* best = &terms_.front();
        for (const auto& t : terms_)
            if (compare(order, t.first, best->first) > 0) best = &t;
        return *best;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, F(1L)); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -F(1L)); }
    Polynomial operator-() const { return scaled(-F(1L)); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        std::map<Monomial, F, OrderGreater> acc;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.emplace_back(m, c);
        return from_sorted(a.r_, std::move(out));
    }

    Polynomial scaled(const F& c) const {
        if (c.is_zero()) return Polynomial(r_);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, v] : terms_) out.emplace_back(m, v * c);
        return from_sorted(r_, std::move(out));
    }

    Polynomial times_monomial(const Monomial& m) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [tm, c] : terms_) out.emplace_back(tm * m, c);
        return from_sorted(r_, std::move(out));  // multiplication by a monomial preserves grevlex order
    }

    Polynomial pow(int e) const {
        Polynomial acc = constant(r_, F(1L));
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    /// Makes the grevlex-leading coefficient one.
    Polynomial monic(MonomialOrder order = MonomialOrder::grevlex) const {
        if (is_zero()) return *this;
        return scaled(leading_term(order).second.inverse());
    }

    F evaluate(const std::vector<F>& point) const {
        if (static_cast<int>(point.size()) != r_ + 1) throw DimensionMismatch("evaluation point has wrong length");
        F acc;
        for (const auto& [m, c] : terms_) {
            F v = c;
            for (int i = 0; i <= r_; ++i)
                for (int k = 0; k < m[i]; ++k) v *= point[static_cast<std::size_t>(i)];
            acc += v;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.r_ == b.r_ && a.terms_.size() == b.terms_.size() &&
               std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                          [](const Term& x, const Term& y) { return x.first == y.first && x.second == y.second; });
    }

    /// Prints with the given variable namer; default names are x0..xr.
    std::string to_string(const std::function<std::string(int)>& name = {}) const {
        if (terms_.empty()) return "0";
        auto var = [&](int i) { return name ? name(i) : "x" + std::to_string(i); };
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string coef = c.to_string();
            bool negative = !coef.empty() && coef[0] == '-';
            if (negative) coef.erase(0, 1);
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (int i = 0; i <= r_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += var(i);
                if (m[i] > 1) mono += '^' + std::to_string(m[i]);
            }
            if (mono.empty())
                out += coef;
            else if (coef == "1")
                out += mono;
            else
                out += coef + '*' + mono;
        }
        return out;
    }

    void check_same(const Polynomial& other) const {
        if (r_ != other.r_) throw DimensionMismatch("polynomials live in different rings");
    }

private:
    static Polynomial from_sorted(int r, std::vector<Term> terms) {
        Polynomial p(r);
        p.terms_ = std::move(terms);
        p.refresh();
        return p;
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, const F& sign) {
        a.check_same(b);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        OrderGreater greater;
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && greater(i->first, j->first))) {
                out.push_back(*i++);
            } else if (i == a.terms_.end() || greater(j->first, i->first)) {
                out.emplace_back(j->first, j->second * sign);
                ++j;
            } else {
                F c = i->second + j->second * sign;
                if (!c.is_zero()) out.emplace_back(i->first, c);
                ++i;
                ++j;
            }
        }
        return from_sorted(a.r_, std::move(out));
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return OrderGreater{}(x.first, y.first); });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().first == t.first)
                merged.back().second += t.second;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
        terms_ = std::move(merged);
        refresh();
    }

    void refresh() {
        homogeneous_ = true;
        max_degree_ = 0;
        for (const auto& [m, c] : terms_) {
            if (m.degree() != terms_.front().first.degree()) homogeneous_ = false;
            max_degree_ = std::max(max_degree_, m.degree());
        }
    }

    int r_;
    std::vector<Term> terms_;
    bool homogeneous_ = true;
    int max_degree_ = 0;
};

/// Generators of a homogeneous ideal in k[x_0..x_r]; d is the largest generator degree.
template <Field F>
struct IdealPresentation {
    int r = 0;
    std::vector<Polynomial<F>> generators;

    int d() const {
        int out = 0;
        for (const auto& g : generators) out = std::max(out, g.degree());
        return out;
    }

    bool is_monomial() const {
        return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_monomial(); });
    }

    static IdealPresentation from(int r, std::vector<Polynomial<F>> gens) {
        IdealPresentation out{r, {}};
        for (auto& g : gens) {
            if (g.r() != r) throw DimensionMismatch("generator outside the ambient ring");
            if (g.is_zero()) throw InputError("zero generator");
            if (!g.is_homogeneous()) throw InputError("inhomogeneous generator " + g.to_string());
            out.generators.push_back(std::move(g));
        }
        return out;
    }
};

}  // namespace nstor
