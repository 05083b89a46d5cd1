#pragma once

// Monomials x^a in k[x_0, ..., x_r] and the three supported monomial orders.

#include "nstor/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nstor {

class Monomial {
public:
    /// Exponent vector of length r + 1; must be nonempty and nonnegative.
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        if (exps_.empty()) throw InputError("a monomial needs at least one variable (r >= 0)");
        for (int e : exps_)
            if (e < 0) throw InputError("negative exponent in monomial");
        degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
    }

    static Monomial one(int r) { return Monomial(std::vector<int>(static_cast<std::size_t>(r) + 1, 0)); }
    static Monomial variable(int r, int i, int power = 1) {
        if (i < 0 || i > r) throw VariableOutOfRange("variable x" + std::to_string(i) + " outside x0..x" + std::to_string(r));
        std::vector<int> e(static_cast<std::size_t>(r) + 1, 0);
        e[static_cast<std::size_t>(i)] = power;
        return Monomial(std::move(e));
    }

    int r() const { return static_cast<int>(exps_.size()) - 1; }
    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    std::span<const int> exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    /// Number of variables dividing this monomial, minus one.
    int mu() const {
        return static_cast<int>(std::count_if(exps_.begin(), exps_.end(), [](int e) { return e > 0; })) - 1;
    }

    /// Index of the single variable if this is a pure power x_i^b with b > 0, else -1.
    int pure_power_variable() const {
        int found = -1;
        for (int i = 0; i < nvars(); ++i) {
            if ((*this)[i] > 0) {
                if (found >= 0) return -1;
                found = i;
            }
        }
        return found;
    }

    bool divides(const Monomial& other) const {
        check_same(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const {
        std::vector<int> e(other.exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
        return Monomial(std::move(e));
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.check_same(b);
        std::vector<int> e(a.exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same(b);
        std::vector<int> e(a.exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_same(b);
        std::vector<int> e(a.exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    bool coprime(const Monomial& other) const {
        check_same(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && other.exps_[i] > 0) return false;
        return true;
    }

    Monomial times_variable(int i, int power = 1) const {
        std::vector<int> e(exps_);
        e[static_cast<std::size_t>(i)] += power;
        return Monomial(std::move(e));
    }

    /// Plain exponent-vector comparison; used for containers, not as a monomial order.
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

    /// "x0^2*x1", or "1" for the unit monomial.
    std::string to_string() const {
        std::string out;
        for (int i = 0; i < nvars(); ++i) {
            const int e = (*this)[i];
            if (e == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x' + std::to_string(i);
            if (e > 1) out += '^' + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

    void check_same(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw DimensionMismatch("monomials live in different rings (r = " + std::to_string(r()) + " vs " +
                                    std::to_string(other.r()) + ")");
    }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
        return h;
    }
};

enum class MonomialOrder { lex, grlex, grevlex };

inline std::string_view to_string(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::lex: return "lex";
        case MonomialOrder::grlex: return "grlex";
        case MonomialOrder::grevlex: return "grevlex";
    }
    return "?";
}

inline MonomialOrder parse_order(std::string_view name) {
    if (name == "lex") return MonomialOrder::lex;
    if (name == "grlex" || name == "graded-lex" || name == "deglex") return MonomialOrder::grlex;
    if (name == "grevlex" || name == "graded-reverse-lex" || name == "degrevlex") return MonomialOrder::grevlex;
    throw InputError("unknown monomial order '" + std::string(name) + "'");
}

/// Strict total multiplicative order with x0 > x1 > ... > xr and 1 minimal.
inline std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
    a.check_same(b);
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    if (order != MonomialOrder::lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
    if (order == MonomialOrder::grevlex) {
        for (std::size_t i = ea.size(); i-- > 0;)
            if (ea[i] != eb[i]) return eb[i] <=> ea[i];
        return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] <=> eb[i];
    return std::strong_ordering::equal;
}

/// Comparator that sorts monomials in descending order.
struct OrderGreater {
    MonomialOrder order = MonomialOrder::grevlex;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(order, a, b) > 0; }
};

/// All monomials of degree t in r + 1 variables, sorted descending in the given order.
inline std::vector<Monomial> monomials_of_degree(int r, int t, MonomialOrder order = MonomialOrder::grevlex) {
    std::vector<Monomial> out;
    if (t < 0) return out;
    std::vector<int> e(static_cast<std::size_t>(r) + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == r) {
            e[static_cast<std::size_t>(i)] = left;
            out.emplace_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(i)] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, t);
    std::sort(out.begin(), out.end(), OrderGreater{order});
    return out;
}

}  // namespace nstor
