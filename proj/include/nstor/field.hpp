#pragma once

// Coefficient fields: exact rationals and a prime field fixed at compile time.

#include "nstor/bigint.hpp"

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nstor {

template <typename F>
concept Field = requires(const F a, const F b, const BigInt z) {
    { F() } -> std::same_as<F>;  // zero
    { F(z) } -> std::same_as<F>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::same_as<F>;
    { a.to_string() } -> std::convertible_to<std::string>;
    { F::name() } -> std::convertible_to<std::string>;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(const BigInt& v) : value_(v) {}
    Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
        if (den == 0) throw std::domain_error("zero denominator");
        value_.canonicalize();
    }
    explicit Rational(const BigRational& v) : value_(v) { value_.canonicalize(); }

    static std::string name() { return "QQ"; }

    const BigRational& value() const { return value_; }
    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_negative() const { return value_ < 0; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(BigRational(1) / value_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return Rational(BigRational(a.value_ / b.value_));
    }
    Rational operator-() const { return Rational(BigRational(-value_)); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

    std::string to_string() const { return value_.get_str(10); }

private:
    BigRational value_;
};

/// Residue modulo the prime P, stored in [0, P).
template <std::uint32_t P>
class PrimeField {
    static_assert(P >= 2 && P < (1u << 31), "modulus must fit in 31 bits");

public:
    PrimeField() = default;
    PrimeField(long v) : value_(reduce(v)) {}
    PrimeField(const BigInt& v) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), P);
        value_ = static_cast<std::uint32_t>(r.get_ui());
    }

    static constexpr std::uint32_t modulus() { return P; }
    static std::string name() { return "GF(" + std::to_string(P) + ")"; }

    std::uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    PrimeField inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // Fermat: a^(P-2)
        std::uint64_t base = value_, acc = 1;
        std::uint32_t e = P - 2;
        while (e) {
            if (e & 1u) acc = acc * base % P;
            base = base * base % P;
            e >>= 1u;
        }
        return from_raw(static_cast<std::uint32_t>(acc));
    }

    friend PrimeField operator+(PrimeField a, PrimeField b) {
        std::uint32_t s = a.value_ + b.value_;
        return from_raw(s >= P ? s - P : s);
    }
    friend PrimeField operator-(PrimeField a, PrimeField b) {
        return from_raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + P - b.value_);
    }
    friend PrimeField operator*(PrimeField a, PrimeField b) {
        return from_raw(static_cast<std::uint32_t>(std::uint64_t(a.value_) * b.value_ % P));
    }
    friend PrimeField operator/(PrimeField a, PrimeField b) { return a * b.inverse(); }
    PrimeField operator-() const { return from_raw(value_ == 0 ? 0 : P - value_); }
    PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
    PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
    PrimeField& operator*=(PrimeField o) { return *this = *this * o; }

    friend bool operator==(PrimeField a, PrimeField b) { return a.value_ == b.value_; }

    std::string to_string() const { return std::to_string(value_); }

private:
    static std::uint32_t reduce(long v) {
        long r = v % static_cast<long>(P);
        return static_cast<std::uint32_t>(r < 0 ? r + P : r);
    }
    static PrimeField from_raw(std::uint32_t v) {
        PrimeField out;
        out.value_ = v;
        return out;
    }

    std::uint32_t value_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;
using Fp = PrimeField<kDefaultPrime>;

static_assert(Field<Rational>);
static_assert(Field<Fp>);

/// Signed integer representative used when printing: rationals print as-is,
/// residues print their canonical value in [0, p).
template <Field F>
inline std::ostream& operator<<(std::ostream& os, const F& v) {
    return os << v.to_string();
}

}  // namespace nstor
