#pragma once

// Gotzmann numbers: exact by binomial decomposition, and the closed-form
// majorant for the Gotzmann number of a quotient by degree <= d equations.

#include "nstor/bigint.hpp"
#include "nstor/errors.hpp"
#include "nstor/hilbert.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace nstor {

/// Q(t) = sum_{i=1..s} C(t + a_i - i + 1, a_i), a weakly decreasing.
struct GotzmannDecomposition {
    std::vector<int> a;

    std::size_t s() const { return a.size(); }

    /// The i-th summand (i counted from 1) as a polynomial.
    static HilbertPolynomial summand(int a_i, long i) {
        return HilbertPolynomial::binomial(a_i - i + 1, static_cast<unsigned>(a_i));
    }

    HilbertPolynomial reconstruct() const {
        HilbertPolynomial out;
        for (std::size_t k = 0; k < a.size(); ++k) out = out + summand(a[k], static_cast<long>(k) + 1);
        return out;
    }
};

struct GotzmannOptions {
    std::size_t max_terms = 1'000'000;
};

/// Greedy extraction of the decomposition of a quotient Hilbert polynomial Q.
///
/// Admissibility is judged by the remainder's leading coefficient: a remainder
/// whose leading coefficient is negative, or whose degree exceeds the previous
/// a_i, cannot be completed.
inline GotzmannDecomposition gotzmann_decompose(const HilbertPolynomial& Q, const GotzmannOptions& options = {}) {
    GotzmannDecomposition out;
    HilbertPolynomial rest = Q;
    long i = 1;
    while (!rest.is_zero()) {
        const int a = rest.degree();
        if (rest.leading_coefficient() < 0)
            throw NotAdmissible("remainder " + rest.to_string() + " after " + std::to_string(i - 1) +
                                " terms has negative leading coefficient");
        if (!out.a.empty() && a > out.a.back())
            throw NotAdmissible("decomposition degree would increase from " + std::to_string(out.a.back()) + " to " +
                                std::to_string(a));
        if (out.a.size() >= options.max_terms)
            throw NotAdmissible("decomposition exceeds " + std::to_string(options.max_terms) + " terms");
        out.a.push_back(a);
        rest = rest - GotzmannDecomposition::summand(a, i);
        ++i;
    }
    return out;
}

/// Gotzmann number from the ideal's Hilbert polynomial P, through Q = C(t+r,r) - P.
inline GotzmannDecomposition gotzmann_decompose_ideal(const HilbertPolynomial& P, int r, const GotzmannOptions& options = {}) {
    return gotzmann_decompose(complement_in_ambient(P, r), options);
}

/// ceil((3/2 d^c + d)^(b 2^(b-1))) for an ideal generated in degree <= d,
/// with Krull dimension b of the quotient and c = r + 1 - b.
inline BigInt hoa_bound(int d, int b, int c) {
    if (d < 2) throw InputError("hoa bound needs d >= 2");
    if (b < 1 || c < 1) throw InputError("hoa bound needs b >= 1 and c >= 1");
    if (b > 20) throw ScaleExceeded("exponent b 2^(b-1) too large for exact evaluation");
    const unsigned long e = static_cast<unsigned long>(b) << (b - 1);
    const BigInt num = 3 * pow(BigInt(d), static_cast<unsigned long>(c)) + 2 * BigInt(d);
    BigRational v(pow(num, e), pow(BigInt(2), e));
    v.canonicalize();
    return ceil(v);
}

struct TorsionBoundParameters {
    BigInt n;
    BigInt m;
    std::string mode;  // "majorize" or "codim"
};

/// Parameters (n, m) with n >= (d-1) codim X and m above the Gotzmann numbers
/// of X and of nH on X.
///
/// Majorize mode: n = dr and m = (dr)^(r^2 2^(r-1)), valid for every codimension.
/// Codim mode: n = (d-1) codim and m = the larger closed-form majorant for X
/// (Krull dim r+1-codim) and for nH (Krull dim r-codim), both taken at degree
/// max(d, n).
inline TorsionBoundParameters torsion_bound_parameters(int d, int r, std::optional<int> codim) {
    if (d < 2) throw InputError("parameters need d >= 2");
    if (r < 1) throw InputError("parameters need r >= 1");
    if (!codim) {
        if (r > 12) throw ScaleExceeded("exponent r^2 2^(r-1) too large for exact evaluation");
        const BigInt n = BigInt(d) * r;
        const unsigned long e = static_cast<unsigned long>(r) * static_cast<unsigned long>(r) << (r - 1);
        return {n, pow(n, e), "majorize"};
    }
    const int c = *codim;
    if (c < 1 || c > r) throw InputError("codimension must lie in 1..r");
    const long n = static_cast<long>(d - 1) * c;
    const int dd = static_cast<int>(std::max<long>({d, n, 2}));
    BigInt m = hoa_bound(dd, r + 1 - c, c);
    if (r - c >= 1) m = std::max(m, hoa_bound(dd, r - c, c + 1));
    return {BigInt(n), m, "codim"};
}

}  // namespace nstor
