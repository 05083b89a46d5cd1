#pragma once

// Hilbert functions, series numerators and Hilbert polynomials of R/I.

#include "nstor/bigint.hpp"
#include "nstor/errors.hpp"
#include "nstor/groebner.hpp"
#include "nstor/monomial_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace nstor {

/// Univariate polynomial in t with rational coefficients (power basis, c[0] + c[1] t + ...).
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static HilbertPolynomial constant(const BigRational& v) { return HilbertPolynomial({v}); }

    /// C(t + s, k) as a polynomial in t.
    static HilbertPolynomial binomial(long s, unsigned k) {
        HilbertPolynomial out = constant(1);
        for (unsigned i = 0; i < k; ++i) out = out * HilbertPolynomial({BigRational(s - static_cast<long>(i)), BigRational(1)});
        BigInt fact = 1;
        for (unsigned i = 2; i <= k; ++i) fact *= i;
        return out.scaled(BigRational(1) / BigRational(fact));
    }

    /// Polynomial through f(t0), f(t0+1), ... via Newton forward differences.
    static HilbertPolynomial interpolate(long t0, std::vector<BigInt> values) {
        HilbertPolynomial out;
        std::vector<BigInt> diff = std::move(values);
        for (unsigned k = 0; !diff.empty(); ++k) {
            if (diff.front() != 0) out = out + binomial(-t0, k).scaled(BigRational(diff.front()));
            for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
            diff.pop_back();
        }
        return out;
    }

    const std::vector<BigRational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigRational leading_coefficient() const { return c_.empty() ? BigRational(0) : c_.back(); }

    BigRational operator()(const BigInt& t) const {
        BigRational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * BigRational(t) + c_[i];
        return acc;
    }
    BigRational operator()(long t) const { return (*this)(BigInt(t)); }

    /// Value at t, which must be an integer.
    BigInt at(long t) const {
        BigRational v = (*this)(t);
        if (v.get_den() != 1) throw InputError("polynomial is not integer-valued at t = " + std::to_string(t));
        return v.get_num();
    }

    friend HilbertPolynomial operator+(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()), BigRational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return HilbertPolynomial(std::move(c));
    }
    friend HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        return a + b.scaled(BigRational(-1));
    }
    friend HilbertPolynomial operator*(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return HilbertPolynomial(std::move(c));
    }
    friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) { return a.c_ == b.c_; }

    HilbertPolynomial scaled(const BigRational& s) const {
        std::vector<BigRational> c = c_;
        for (auto& v : c) v *= s;
        return HilbertPolynomial(std::move(c));
    }

    /// t -> t - m.
    HilbertPolynomial shifted(long m) const {
        HilbertPolynomial out;
        const HilbertPolynomial lin({BigRational(-m), BigRational(1)});
        HilbertPolynomial power = constant(1);
        for (const auto& ci : c_) {
            out = out + power.scaled(ci);
            power = power * lin;
        }
        return out;
    }

    /// a_j with P(t) = sum_j a_j C(t + j, j).
    std::vector<BigRational> binomial_basis() const {
        std::vector<BigRational> out(c_.size(), BigRational(0));
        HilbertPolynomial rest = *this;
        while (!rest.is_zero()) {
            const int j = rest.degree();
            const HilbertPolynomial b = binomial(j, static_cast<unsigned>(j));
            const BigRational a = rest.leading_coefficient() / b.leading_coefficient();
            out[static_cast<std::size_t>(j)] = a;
            rest = rest - b.scaled(a);
        }
        return out;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            BigRational v = c_[i];
            const bool negative = v < 0;
            if (negative) v = -v;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const std::string coef = v.get_str(10);
            if (i == 0)
                out += coef;
            else {
                if (v != 1) out += coef + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        for (auto& v : c_) v.canonicalize();
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigRational> c_;
};

/// Numerator N(s) of the Hilbert series N(s) / (1 - s)^(r+1) of R/I.
struct HilbertSeriesNumerator {
    int r = 0;
    std::vector<BigInt> coeffs;  // coeffs[j] multiplies s^j; trailing zeros trimmed

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Coefficient of s^t in the full series: sum_j c_j C(t - j + r, r).
    BigInt series_coefficient(long t) const {
        BigInt acc = 0;
        for (std::size_t j = 0; j < coeffs.size() && static_cast<long>(j) <= t; ++j)
            if (coeffs[j] != 0) acc += coeffs[j] * nstor::binomial(t - static_cast<long>(j) + r, static_cast<unsigned long>(r));
        return acc;
    }

    HilbertPolynomial polynomial() const {
        HilbertPolynomial out;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0)
                out = out + HilbertPolynomial::binomial(r - static_cast<long>(j), static_cast<unsigned>(r)).scaled(BigRational(coeffs[j]));
        return out;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            BigInt v = coeffs[j];
            const bool negative = v < 0;
            if (negative) v = -v;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (j == 0 || v != 1) out += v.get_str();
            if (j > 0) {
                if (v != 1) out += "*";
                out += "s";
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }
};

namespace detail {

inline void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline void add_shifted(std::vector<BigInt>& acc, const std::vector<BigInt>& v, int shift, int sign) {
    if (acc.size() < v.size() + static_cast<std::size_t>(shift)) acc.resize(v.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t j = 0; j < v.size(); ++j) acc[j + static_cast<std::size_t>(shift)] += sign * v[j];
}

}  // namespace detail

inline constexpr std::size_t kMaxInclusionExclusionGenerators = 20;

/// Numerator by inclusion-exclusion over subsets S of minimal generators: sum (-1)^|S| s^deg lcm(S).
inline HilbertSeriesNumerator hilbert_series_numerator(const MonomialIdeal& I) {
    const std::size_t k = I.size();
    if (k > kMaxInclusionExclusionGenerators)
        throw TooManyGenerators(std::to_string(k) + " minimal generators; inclusion-exclusion is limited to " +
                                std::to_string(kMaxInclusionExclusionGenerators));
    HilbertSeriesNumerator out{I.r(), {}};
    const auto& g = I.generators();
    // depth-first over subsets carrying the running lcm
    std::vector<BigInt> c;
    auto rec = [&](auto&& self, std::size_t next, const Monomial& l, int size) -> void {
        const std::size_t deg = static_cast<std::size_t>(l.degree());
        if (c.size() <= deg) c.resize(deg + 1, 0);
        c[deg] += (size % 2 == 0) ? 1 : -1;
        for (std::size_t i = next; i < k; ++i) self(self, i + 1, lcm(l, g[i]), size + 1);
    };
    rec(rec, 0, Monomial::one(I.r()), 0);
    detail::trim(c);
    out.coeffs = std::move(c);
    return out;
}

/// Same numerator by the colon recursion N(J + (g)) = N(J) - s^deg g N(J : g); no generator limit.
inline HilbertSeriesNumerator hilbert_series_numerator_recursive(const MonomialIdeal& I) {
    auto rec = [](auto&& self, const MonomialIdeal& J) -> std::vector<BigInt> {
        if (J.is_zero()) return {1};
        if (J.is_unit()) return {};
        const auto& gens = J.generators();
        bool disjoint = true;
        for (std::size_t a = 0; a < gens.size() && disjoint; ++a)
            for (std::size_t b = a + 1; b < gens.size() && disjoint; ++b) disjoint = gens[a].coprime(gens[b]);
        std::vector<BigInt> out{1};
        if (disjoint) {
            for (const auto& g : gens) {
                std::vector<BigInt> next(out.size() + static_cast<std::size_t>(g.degree()), 0);
                detail::add_shifted(next, out, 0, 1);
                detail::add_shifted(next, out, g.degree(), -1);
                out = std::move(next);
            }
            detail::trim(out);
            return out;
        }
        const Monomial last = gens.back();
        MonomialIdeal rest(J.r(), std::vector<Monomial>(gens.begin(), gens.end() - 1));
        out = self(self, rest);
        detail::add_shifted(out, self(self, rest.colon(last)), last.degree(), -1);
        detail::trim(out);
        return out;
    };
    return HilbertSeriesNumerator{I.r(), rec(rec, I)};
}

inline BigInt hilbert_function(const MonomialIdeal& I, long t) {
    if (t < 0) return 0;
    if (nstor::binomial(t + I.r(), static_cast<unsigned long>(I.r())) <= 200000)
        return static_cast<long>(I.standard_monomials(static_cast<int>(t)).size());
    return hilbert_series_numerator_recursive(I).series_coefficient(t);
}

template <Field F>
BigInt hilbert_function(const IdealPresentation<F>& I, long t, const GroebnerOptions& options = {}) {
    return hilbert_function(initial_ideal(I, MonomialOrder::grevlex, options), t);
}

inline HilbertPolynomial hilbert_polynomial(const MonomialIdeal& I) {
    const auto num = I.size() <= kMaxInclusionExclusionGenerators ? hilbert_series_numerator(I)
                                                                   : hilbert_series_numerator_recursive(I);
    HilbertPolynomial hp = num.polynomial();
    // function and polynomial agree from the numerator degree on
    const long start = std::max(0, num.degree());
    for (long t = start; t < start + 3; ++t)
        if (hp(t) != BigRational(hilbert_function(I, t)))
            throw std::logic_error("Hilbert polynomial disagrees with the Hilbert function at t = " + std::to_string(t));
    return hp;
}

template <Field F>
HilbertPolynomial hilbert_polynomial(const IdealPresentation<F>& I, const GroebnerOptions& options = {}) {
    return hilbert_polynomial(initial_ideal(I, MonomialOrder::grevlex, options));
}

/// C(t + r, r) as a polynomial.
inline HilbertPolynomial ambient_hilbert_polynomial(int r) { return HilbertPolynomial::binomial(r, static_cast<unsigned>(r)); }

/// Hilbert polynomial of the ideal sheaf of the divisor mH on X inside P^r: C(t+r,r) - HP_X(t) + HP_X(t-m).
inline HilbertPolynomial ideal_hp_of_divisor(const HilbertPolynomial& hp_x, long m, int r) {
    if (m < 1) throw InputError("divisor multiple m must be at least 1");
    if (hp_x.degree() < 1) throw InputError("X must have positive dimension (Hilbert polynomial of degree >= 1)");
    return ambient_hilbert_polynomial(r) - hp_x + hp_x.shifted(m);
}

/// Q = C(t+r,r) - P and back.
inline HilbertPolynomial complement_in_ambient(const HilbertPolynomial& p, int r) { return ambient_hilbert_polynomial(r) - p; }

}  // namespace nstor
