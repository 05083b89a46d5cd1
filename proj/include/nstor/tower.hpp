#pragma once

// Iterated-exponential numbers exp2^h(x) with optional exact backing, the
// torsion bound towers, generator-count bounds, and a step-by-step audit of
// the inequality chain behind the headline bound.

#include "nstor/bigint.hpp"
#include "nstor/errors.hpp"
#include "nstor/gotzmann.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nstor {

inline constexpr std::size_t kTowerExactDigits = 10'000;
inline constexpr long double kTowerTolerance = 1e-9L;

/// exp2 applied h times to x. Normalized: h = 0 and 0 <= x < 2, or h >= 1 and 1 <= x < 2.
class TowerNumber {
public:
    TowerNumber() = default;

    static TowerNumber from_real(long double v) {
        if (!(v >= 0) || !std::isfinite(v)) throw InputError("tower value must be a finite nonnegative real");
        return from_parts(0, v);
    }

    static TowerNumber from_parts(int h, long double x) {
        TowerNumber out;
        out.h_ = h;
        out.x_ = x;
        out.normalize();
        return out;
    }

    static TowerNumber from_integer(const BigInt& v) {
        if (v < 0) throw InputError("tower value must be nonnegative");
        TowerNumber out;
        if (v < BigInt(1) << 60)
            out = from_real(static_cast<long double>(v.get_d()));
        else
            out = from_parts(1, log2(v));
        if (decimal_digits_estimate(v) <= kTowerExactDigits) out.exact_ = v;
        return out;
    }

    int height() const { return h_; }
    long double top() const { return x_; }
    const std::optional<BigInt>& exact() const { return exact_; }
    long double rel_error() const { return rel_error_; }

    /// The value as a long double, when it fits.
    std::optional<long double> to_real() const { return level_value(h_); }

    /// log2 of the value as a long double, when it fits.
    std::optional<long double> log2_real() const {
        if (h_ >= 1) return level_value(h_ - 1);
        if (x_ <= 0) return std::nullopt;
        return std::log2(x_);
    }

    /// "2^2^2^2^2^15.5098": carets above the largest partial value below 64.
    std::string render() const {
        if (exact_ && decimal_digits_estimate(*exact_) <= 30) return to_string(*exact_);
        long double v = x_;
        int j = 0;
        while (j < h_ && std::exp2(v) < 64) {
            v = std::exp2(v);
            ++j;
        }
        std::ostringstream os;
        for (int k = j; k < h_; ++k) os << "2^";
        os << std::fixed << std::setprecision(4) << v;
        return os.str();
    }

    void normalize() {
        if (!std::isfinite(x_)) throw PrecisionLoss("tower top is not finite");
        if (h_ < 0) throw InputError("tower height must be nonnegative");
        while (h_ > 0 && x_ < 1) {
            x_ = std::exp2(x_);
            --h_;
        }
        while (x_ >= 2) {
            x_ = std::log2(x_);
            ++h_;
        }
        if (x_ < 0) throw InputError("tower value must be nonnegative");
    }

    void drop_exact() { exact_.reset(); }
    void set_exact(BigInt v) {
        if (decimal_digits_estimate(v) <= kTowerExactDigits) exact_ = std::move(v);
    }
    void note_error(long double e) { rel_error_ = std::max(rel_error_, e); }

private:
    // exp2 applied k times to x, if it stays finite
    std::optional<long double> level_value(int k) const {
        long double v = x_;
        for (int i = 0; i < k; ++i) {
            if (v > 16000) return std::nullopt;
            v = std::exp2(v);
        }
        return v;
    }

    int h_ = 0;
    long double x_ = 0;
    std::optional<BigInt> exact_;
    long double rel_error_ = 0;
};

enum class TowerOrder { less, equal, greater, incomparable };

inline std::string to_string(TowerOrder o) {
    switch (o) {
        case TowerOrder::less: return "less";
        case TowerOrder::equal: return "equal";
        case TowerOrder::greater: return "greater";
        case TowerOrder::incomparable: return "incomparable";
    }
    return "?";
}

/// Compares the tower forms only; a gap below the tolerance at equal height is incomparable.
inline TowerOrder compare_towers(const TowerNumber& a, const TowerNumber& b) {
    if (a.height() != b.height()) return a.height() < b.height() ? TowerOrder::less : TowerOrder::greater;
    if (a.top() == b.top()) return TowerOrder::equal;
    if (std::fabs(a.top() - b.top()) < kTowerTolerance) return TowerOrder::incomparable;
    return a.top() < b.top() ? TowerOrder::less : TowerOrder::greater;
}

/// Exact comparison when both sides are exact-backed, else compare_towers.
inline TowerOrder compare(const TowerNumber& a, const TowerNumber& b) {
    if (a.exact() && b.exact()) {
        const int c = cmp(*a.exact(), *b.exact());
        return c < 0 ? TowerOrder::less : c > 0 ? TowerOrder::greater : TowerOrder::equal;
    }
    return compare_towers(a, b);
}

inline TowerNumber exp2(const TowerNumber& a) {
    TowerNumber out = TowerNumber::from_parts(a.height() + 1, a.top());
    out.note_error(a.rel_error());
    if (a.exact() && *a.exact() <= BigInt(static_cast<unsigned long>(kTowerExactDigits * 3.3219)))
        out.set_exact(BigInt(1) << static_cast<mp_bitcnt_t>(a.exact()->get_ui()));
    return out;
}

inline TowerNumber log2(const TowerNumber& a) {
    const auto v = a.to_real();
    if (a.height() == 0 || (v && *v < 2)) throw LogOfSmallValue("log2 of a value below 2");
    TowerNumber out = TowerNumber::from_parts(a.height() - 1, a.top());
    out.note_error(a.rel_error());
    if (a.exact()) {
        const BigInt& e = *a.exact();
        const mp_bitcnt_t low = mpz_scan1(e.get_mpz_t(), 0);
        if (mpz_sizeinbase(e.get_mpz_t(), 2) == low + 1) out.set_exact(BigInt(static_cast<unsigned long>(low)));
    }
    return out;
}

/// a + c for a real c with a + c >= 0; when a exceeds long double range the
/// addend is absorbed (relative effect below 2^-16000).
inline TowerNumber plus_real(const TowerNumber& a, long double c) {
    if (const auto v = a.to_real()) {
        TowerNumber out = TowerNumber::from_real(*v + c);
        out.note_error(a.rel_error());
        return out;
    }
    TowerNumber out = a;
    out.drop_exact();
    return out;
}

/// a * c for a positive real c.
inline TowerNumber times_real(const TowerNumber& a, long double c) {
    if (!(c > 0)) throw InputError("scale factor must be positive");
    if (const auto v = a.to_real(); v && std::isfinite(*v * c)) {
        TowerNumber out = TowerNumber::from_real(*v * c);
        out.note_error(a.rel_error());
        return out;
    }
    return exp2(plus_real(log2(a), std::log2(c)));
}

inline TowerNumber add(const TowerNumber& a, const TowerNumber& b) {
    if (a.exact() && b.exact()) return TowerNumber::from_integer(*a.exact() + *b.exact());
    const auto va = a.to_real();
    const auto vb = b.to_real();
    if (va && vb && std::isfinite(*va + *vb)) return TowerNumber::from_real(*va + *vb);
    const TowerOrder o = compare_towers(a, b);
    if (o == TowerOrder::incomparable) throw PrecisionLoss("sum of two towers equal within precision");
    if (o == TowerOrder::equal) return times_real(a, 2);
    const TowerNumber& A = o == TowerOrder::greater ? a : b;
    const TowerNumber& B = o == TowerOrder::greater ? b : a;
    if (B.height() == 0) return plus_real(A, B.top());
    const TowerNumber la = log2(A);
    const TowerNumber lb = log2(B);
    const auto ra = la.to_real();
    const auto rb = lb.to_real();
    if (ra && rb) {
        TowerNumber out = exp2(TowerNumber::from_real(*ra + std::log2(1 + std::exp2(*rb - *ra))));
        out.note_error(std::max(a.rel_error(), b.rel_error()));
        return out;
    }
    // absorb B only when log2 A - log2 B provably exceeds 30
    if (compare_towers(la, plus_real(lb, 30)) != TowerOrder::greater)
        throw PrecisionLoss("cannot bound the smaller addend within tolerance");
    TowerNumber out = A;
    out.drop_exact();
    out.note_error(std::max({a.rel_error(), b.rel_error(), std::exp2(-30.0L)}));
    return out;
}

inline TowerNumber mul(const TowerNumber& a, const TowerNumber& b) {
    if (a.exact() && b.exact() &&
        decimal_digits_estimate(*a.exact()) + decimal_digits_estimate(*b.exact()) <= kTowerExactDigits + 1)
        return TowerNumber::from_integer(*a.exact() * *b.exact());
    if (a.height() == 0 && b.height() == 0) return TowerNumber::from_real(a.top() * b.top());
    if (a.height() == 0 || b.height() == 0) {
        const TowerNumber& small = a.height() == 0 ? a : b;
        const TowerNumber& big = a.height() == 0 ? b : a;
        if (small.top() == 0) return TowerNumber::from_real(0);
        return times_real(big, small.top());
    }
    TowerNumber out = exp2(add(log2(a), log2(b)));
    out.drop_exact();
    return out;
}

/// a^b = exp2(b log2 a).
inline TowerNumber pow(const TowerNumber& a, const TowerNumber& b) {
    if (a.exact() && b.exact() && b.exact()->fits_ulong_p()) {
        const long double digits = static_cast<long double>(b.exact()->get_ui()) * decimal_digits_estimate(*a.exact());
        if (digits <= kTowerExactDigits) return TowerNumber::from_integer(nstor::pow(*a.exact(), b.exact()->get_ui()));
    }
    if (a.height() == 0 && b.height() == 0) return TowerNumber::from_real(std::pow(a.top(), b.top()));
    if (a.height() == 0) {
        if (a.top() == 0) return TowerNumber::from_real(0);
        if (a.top() < 1) throw InputError("power of a base below 1 with a tower exponent");
        if (a.top() == 1) return TowerNumber::from_real(1);
        return exp2(times_real(b, std::log2(a.top())));
    }
    TowerNumber out = exp2(mul(b, log2(a)));
    out.drop_exact();
    return out;
}

// ---- bound towers ----

enum class NnsVariant { headline, refined, disconnected };

inline std::string to_string(NnsVariant v) {
    switch (v) {
        case NnsVariant::headline: return "headline";
        case NnsVariant::refined: return "refined";
        case NnsVariant::disconnected: return "disconnected";
    }
    return "?";
}

inline NnsVariant parse_variant(const std::string& s) {
    if (s == "headline") return NnsVariant::headline;
    if (s == "refined") return NnsVariant::refined;
    if (s == "disconnected") return NnsVariant::disconnected;
    throw InputError("unknown variant '" + s + "' (headline, refined, disconnected)");
}

/// Innermost argument y: 2r + 6 log2 r, minus 2 when refined, 2r + 7 log2 r when disconnected.
inline long double nns_exponent(int r, NnsVariant v) {
    const long double lr = std::log2(static_cast<long double>(r));
    switch (v) {
        case NnsVariant::headline: return 2.0L * r + 6 * lr;
        case NnsVariant::refined: return 2.0L * r + 6 * lr - 2;
        case NnsVariant::disconnected: return 2.0L * r + 7 * lr;
    }
    return 0;
}

/// exp2 exp2 exp2 exp_d exp2(y), with exp_d(z) = exp2(z log2 d).
inline TowerNumber nns_bound(int d, int r, NnsVariant v = NnsVariant::headline) {
    if (d < 2) throw InputError("d must be at least 2");
    if (r < 3) throw InputError("r must be at least 3");
    TowerNumber z = exp2(TowerNumber::from_real(nns_exponent(r, v)));
    if (d != 2) z = times_real(z, std::log2(static_cast<long double>(d)));
    z = exp2(z);
    for (int k = 0; k < 3; ++k) z = exp2(z);
    return z;
}

inline TowerNumber pi1_bound(int d, int r) { return nns_bound(d, r, NnsVariant::headline); }
inline TowerNumber nori_bound(int d, int r) { return nns_bound(d, r, NnsVariant::headline); }

struct GeneratorBounds {
    BigInt full;
    BigInt p_power;
};

/// (deg - 1)(deg - 2) clamped at 0, and its half rounded up.
inline GeneratorBounds generator_bounds(const BigInt& deg) {
    if (deg < 1) throw InputError("degree must be at least 1");
    BigInt full = (deg - 1) * (deg - 2);
    if (full < 0) full = 0;
    return {full, ceil_div(full, 2)};
}

// ---- chain audit ----

struct ChainStep {
    std::string step;
    std::string claim;
    std::string lhs;
    std::string rhs;
    std::string mode;  // "exact" or "tower"
    bool pass = false;
    int level = 1;            // margin compares log2 applied this many times to each side
    long double margin_log2 = 0;
};

struct ChainAuditOptions {
    std::size_t exact_digit_cap = 100'000;
};

struct ChainAudit {
    int d = 0;
    int r = 0;
    bool exact_t = false;
    std::vector<ChainStep> steps;

    bool all_pass() const {
        return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.pass; });
    }
    const ChainStep* find(const std::string& id) const {
        for (const auto& s : steps)
            if (s.step == id) return &s;
        return nullptr;
    }
};

namespace detail {

inline std::string render_integer(const BigInt& v) {
    const std::string s = to_string(v);
    if (s.size() <= 40) return s;
    return s.substr(0, 1) + "." + s.substr(1, 5) + "e" + std::to_string(s.size() - 1);
}

inline std::string render_real(long double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

inline long double log2_factorial(int r) {
    long double out = 0;
    for (int i = 2; i <= r; ++i) out += std::log2(static_cast<long double>(i));
    return out;
}

}  // namespace detail

/// Checks each displayed inequality of the chain at (d, r). Big-integer steps
/// are exact while t stays under the digit cap; the rest compare logarithms at
/// the level where the sides separate, after cancelling shared terms.
inline ChainAudit chain_audit(int d, int r, const ChainAuditOptions& options = {}) {
    if (d < 2) throw InputError("d must be at least 2");
    if (r < 3) throw InputError("r must be at least 3");
    if (r > 10) throw ScaleExceeded("r above 10 overflows the chain's exponents");
    ChainAudit out;
    out.d = d;
    out.r = r;

    auto exact_step = [&](std::string id, std::string claim, const BigInt& lhs, const BigInt& rhs, bool equality) {
        ChainStep s{std::move(id), std::move(claim), detail::render_integer(lhs), detail::render_integer(rhs), "exact",
                    equality ? lhs == rhs : lhs <= rhs, 1, 0};
        if (lhs > 0 && rhs > 0) s.margin_log2 = log2(rhs) - log2(lhs);
        out.steps.push_back(std::move(s));
    };
    // lhs and rhs given by their log2^level values (after cancellation)
    auto log_step = [&](std::string id, std::string claim, std::string lhs, std::string rhs, int level,
                        long double margin, bool equality) {
        const bool pass = equality ? std::fabs(margin) <= kTowerTolerance : margin >= 0;
        out.steps.push_back({std::move(id), std::move(claim), std::move(lhs), std::move(rhs), "tower", pass, level, margin});
    };

    const long double ld = std::log2(static_cast<long double>(d));
    const long double lr = std::log2(static_cast<long double>(r));
    const BigInt n = BigInt(d) * r;
    const unsigned long e1 = static_cast<unsigned long>(r) << (r - 1);  // r 2^(r-1)
    const unsigned long er = static_cast<unsigned long>(r) * e1;         // r^2 2^(r-1)
    const BigInt m = nstor::pow(n, er);
    const long double log2n = log2(n);
    const long double log2m = static_cast<long double>(er) * log2n;
    long double log2t = static_cast<long double>(er) * log2m;
    const long double t_digits = log2t * std::log10(2.0L);
    out.exact_t = t_digits < static_cast<long double>(options.exact_digit_cap);

    exact_step("S1", "(d-1)(r-1) <= n = dr", BigInt(d - 1) * (r - 1), n, false);

    BigInt hoa_max = 0;
    for (int b = 2; b <= r; ++b) hoa_max = std::max(hoa_max, hoa_bound(static_cast<int>(n.get_si()), b, r + 1 - b));
    const BigInt hoa_n = hoa_bound(static_cast<int>(n.get_si()), r, r - 1);
    exact_step("S2", "max_{2<=b<=r} (3/2 n^(r+1-b) + n)^(b 2^(b-1)) <= (3/2 n^(r-1) + n)^(r 2^(r-1))", hoa_max, hoa_n,
               false);
    exact_step("S3", "(3/2 n^(r-1) + n)^(r 2^(r-1)) <= m = n^(r^2 2^(r-1))", hoa_n, m, false);

    const BigInt two_e1 = BigInt(1) << static_cast<mp_bitcnt_t>(e1);
    if (out.exact_t) {
        const BigInt t = nstor::pow(m, er);
        log2t = log2(t);
        const unsigned long e_t = static_cast<unsigned long>(r) * r * r * r << (2 * r - 2);
        exact_step("S4", "t = m^(r^2 2^(r-1)) = (dr)^(r^4 2^(2r-2))", t, nstor::pow(n, e_t), true);
        const BigInt hoa_m = ceil_div(nstor::pow(3 * nstor::pow(m, static_cast<unsigned long>(r - 1)) + 2 * m, e1), two_e1);
        exact_step("S5", "(3/2 m^(r-1) + m)^(r 2^(r-1)) <= t", hoa_m, t, false);
        exact_step("S6", "d <= t", BigInt(d), t, false);
        exact_step("S7", "6^1295 dr <= t", nstor::pow(BigInt(6), 1295) * n, t, false);
        const BigInt tr = nstor::pow(t, static_cast<unsigned long>(r));
        exact_step("S8", "C(t+r+1, r) + 1 <= t^r", nstor::binomial(t + r + 1, static_cast<unsigned long>(r)) + 1, tr, false);
        exact_step("S9", "4 C(t+r, r) <= t^r", 4 * nstor::binomial(t + r, static_cast<unsigned long>(r)), tr, false);
    } else {
        const auto lg = [](long double v) { return "2^" + detail::render_real(v); };
        log_step("S4", "t = m^(r^2 2^(r-1)) = (dr)^(r^4 2^(2r-2))", lg(log2t), lg(static_cast<long double>(r) * r * r * r * std::exp2(2.0L * r - 2) * log2n), 1,
                 static_cast<long double>(r) * r * r * r * std::exp2(2.0L * r - 2) * log2n - log2t, true);
        const long double hoa_m_log = static_cast<long double>(e1) *
                                      (std::log2(1.5L) + (r - 1) * log2m + std::log2(1 + 2 / (3 * std::exp2((r - 2) * log2m))));
        log_step("S5", "(3/2 m^(r-1) + m)^(r 2^(r-1)) <= t", lg(hoa_m_log), lg(log2t), 1, log2t - hoa_m_log, false);
        log_step("S6", "d <= t", lg(ld), lg(log2t), 1, log2t - ld, false);
        const long double six = 1295 * std::log2(6.0L) + log2n;
        log_step("S7", "6^1295 dr <= t", lg(six), lg(log2t), 1, log2t - six, false);
        const long double rl = r * log2t;
        const long double c = rl - detail::log2_factorial(r);
        log_step("S8", "C(t+r+1, r) + 1 <= t^r", lg(c), lg(rl), 1, rl - c, false);
        log_step("S9", "4 C(t+r, r) <= t^r", lg(c + 2), lg(rl), 1, rl - c - 2, false);
    }

    // N <= 2^M for M = dim R_t; worst case the central binomial, C(M, M/2) <= 2^M / sqrt(pi M / 2)
    const long double rlog2t = r * log2t;
    const long double log2M = rlog2t - detail::log2_factorial(r);
    {
        const long double gap = 0.5L * (std::log2(std::acos(-1.0L)) - 1 + log2M);
        const TowerNumber M = exp2(TowerNumber::from_real(log2M));
        log_step("S10", "C(M, P(t)) <= 2^M with M = C(t+r, r)", "2^(M - " + detail::render_real(gap) + "), M = " + M.render(),
                 "2^M", 1, gap, false);
    }
    // D <= t^r, N <= 2^(t^r / 4); the sides below are evaluated at these extremes
    const TowerNumber N = exp2(exp2(TowerNumber::from_real(rlog2t - 2)));
    const long double log2D = rlog2t;
    {
        const long double L = 2 * log2D - 1 + std::log2(1 + 2 * std::exp2(-log2D));
        const long double margin = std::log2(1 + log2D) + 1 - std::log2(L);
        log_step("S11", "2^N (D^2/2 + D)^(N 2^(N-1)) <= (2D)^(N 2^N)",
                 "2^2^(log2 N + N - 1 + " + detail::render_real(std::log2(L)) + ")",
                 "2^2^(log2 N + N + " + detail::render_real(std::log2(1 + log2D)) + ")", 2, margin, false);
    }
    {
        // D = C(t+r+1, r) + 1 here, which is about t^r / r!
        const long double dlog = std::log2(1 + log2D - detail::log2_factorial(r));
        const long double rhs = std::log2(1 + rlog2t);
        log_step("S12", "N 2^N (1 + log2 D) <= N 2^N (1 + r log2 t)", "log2 N + N + " + detail::render_real(dlog),
                 "log2 N + N + " + detail::render_real(rhs), 1, rhs - dlog, false);
    }
    {
        // log2 of both sides: t^r/4 + N + log2(1 + r log2 t)  vs  2N + t^r/2; at level 2 both are N-dominated
        const long double lhs2 = std::log2(1 + std::exp2(rlog2t - 2 - N.log2_real().value_or(INFINITY)));
        const long double rhs2 = 1;
        log_step("S13", "N 2^N (1 + r log2 t) <= 2^N 2^N 2^(t^r/2)", "2^(" + N.render() + " + t^r/4 + " +
                 detail::render_real(std::log2(1 + rlog2t)) + ")", "2^(2 " + N.render() + " + t^r/2)", 2, rhs2 - lhs2, false);
    }
    {
        // level 3: log2 log2 (2N + t^r/2) = log2(t^r/4 + 1 + eps)  vs  log2 t^r
        const long double lhs3 = (rlog2t - 2) + std::log2(1 + std::exp2(2 - rlog2t));
        log_step("S14", "2^(2N + t^r/2) <= 2^2^(t^r)", "2^2^2^" + detail::render_real(lhs3), "2^2^2^" + detail::render_real(rlog2t), 3,
                 rlog2t - lhs3, false);
    }
    const long double r5 = std::pow(static_cast<long double>(r), 5) * std::exp2(2.0L * r - 2);
    {
        const long double lhs = rlog2t / ld;
        const long double rhs = r5 * (1 + lr / ld);
        log_step("S15", "log_d log2 log2 2^2^(t^r) = r log_d t = r^5 2^(2r-2) (1 + log_d r)", detail::render_real(lhs),
                 detail::render_real(rhs), 1, (rhs - lhs) / rhs, true);
        const long double r6 = r5 * r;
        log_step("S16", "r^5 2^(2r-2) (1 + log_d r) <= r^6 2^(2r-2)", detail::render_real(rhs), detail::render_real(r6), 1,
                 std::log2(r6) - std::log2(rhs), false);
        const long double y = nns_exponent(r, NnsVariant::refined);
        log_step("S17", "r^6 2^(2r-2) = exp2(2r + 6 log2 r - 2)", detail::render_real(r6), "2^" + detail::render_real(y), 1,
                 y - std::log2(r6), true);
    }
    {
        // five log2's bring each bound tower to y + log2 log2 d
        auto bottom = [&](NnsVariant v) {
            TowerNumber z = nns_bound(d, r, v);
            for (int k = 0; k < 4; ++k) z = log2(z);
            return *z.log2_real();
        };
        const long double refined = bottom(NnsVariant::refined);
        const long double headline = bottom(NnsVariant::headline);
        const long double disconnected = bottom(NnsVariant::disconnected);
        log_step("S18", "refined bound <= headline bound", nns_bound(d, r, NnsVariant::refined).render(),
                 nns_bound(d, r, NnsVariant::headline).render(), 5, headline - refined, false);
        // disconnected case: log_d of (d^r)^(r^6 2^(2r-2)) d^r against r^7 2^(2r)
        const unsigned long r6i = static_cast<unsigned long>(r) * r * r * r * r * r;
        const BigInt lhs = BigInt(r) * (BigInt(r6i) << static_cast<mp_bitcnt_t>(2 * r - 2)) + r;
        const BigInt rhs = BigInt(r6i * static_cast<unsigned long>(r)) << static_cast<mp_bitcnt_t>(2 * r);
        ChainStep s{"S19", "(d^r)^(r^6 2^(2r-2)) d^r <= d^(r^7 2^(2r)) (exponents of d)", detail::render_integer(lhs),
                    detail::render_integer(rhs), "exact", lhs <= rhs, 2, log2(rhs) - log2(lhs)};
        out.steps.push_back(std::move(s));
        log_step("S20", "headline bound <= disconnected bound", nns_bound(d, r, NnsVariant::headline).render(),
                 nns_bound(d, r, NnsVariant::disconnected).render(), 5, disconnected - headline, false);
    }
    return out;
}

}  // namespace nstor
