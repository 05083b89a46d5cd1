#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nstor {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline BigInt pow(long base, unsigned long exponent) { return pow(BigInt(base), exponent); }

/// C(n, k) for arbitrary-precision n and machine-sized k; zero when n < k or n < 0.
inline BigInt binomial(const BigInt& n, unsigned long k) {
    if (n < 0 || n < BigInt(k)) return 0;
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline BigInt binomial(long n, unsigned long k) { return binomial(BigInt(n), k); }

inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline BigInt ceil(const BigRational& q) { return ceil_div(q.get_num(), q.get_den()); }

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline std::string to_string(const BigRational& v) { return v.get_str(10); }

/// Number of decimal digits of |v| (1 for zero).
inline std::size_t decimal_digits(const BigInt& v) {
    if (v == 0) return 1;
    return to_string(BigInt(abs(v))).size();
}

/// Cheap upper estimate of decimal digits, without printing.
inline std::size_t decimal_digits_estimate(const BigInt& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 10);
}

/// log2 of a positive integer, accurate to double precision at any size.
inline long double log2(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log2 of a nonpositive integer");
    long exp = 0;
    const double mantissa = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return static_cast<long double>(exp) + std::log2(static_cast<long double>(mantissa));
}

inline long double log2(const BigRational& v) { return log2(BigInt(v.get_num())) - log2(BigInt(v.get_den())); }

inline std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string(v));
    return v.get_si();
}

}  // namespace nstor
