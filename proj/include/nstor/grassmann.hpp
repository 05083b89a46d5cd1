#pragma once

// Plücker coordinates on Gr(n, V), the K_a / L / Lambda symbolic matrices,
// Fitting-minor equations, linear containment conditions and Plücker
// quadrics, assembled into the defining equations of a Hilbert scheme inside
// P(wedge^n R_t).

#include "nstor/bigint.hpp"
#include "nstor/errors.hpp"
#include "nstor/gotzmann.hpp"
#include "nstor/groebner.hpp"
#include "nstor/hilbert.hpp"
#include "nstor/linalg.hpp"
#include "nstor/parse.hpp"
#include "nstor/polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace nstor {

/// Strictly increasing n-subsets of {0..dimV-1}, in lexicographic order; these index the Plücker variables.
class PluckerIndex {
public:
    PluckerIndex(int n, int dimV) : n_(n), dimV_(dimV) {
        if (n < 0 || dimV < 1 || n > dimV) throw InputError("need 0 <= n <= dim V and dim V >= 1");
        std::vector<int> c(static_cast<std::size_t>(n));
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == n) {
                index_.emplace(c, tuples_.size());
                tuples_.push_back(c);
                return;
            }
            for (int v = start; v <= dimV - (n - pos); ++v) {
                c[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    }

    int n() const { return n_; }
    int dimV() const { return dimV_; }
    std::size_t size() const { return tuples_.size(); }
    const std::vector<int>& tuple(std::size_t k) const { return tuples_[k]; }

    std::size_t index(const std::vector<int>& sorted) const {
        auto it = index_.find(sorted);
        if (it == index_.end()) throw IndexOutOfRange("not a strictly increasing tuple in range");
        return it->second;
    }

    /// z_a for an arbitrary tuple: nullopt if a entry repeats, else (index, sign of the sorting permutation).
    std::optional<std::pair<std::size_t, int>> canonical(std::vector<int> a) const {
        if (static_cast<int>(a.size()) != n_) throw IndexOutOfRange("tuple has the wrong length");
        for (int v : a)
            if (v < 0 || v >= dimV_) throw IndexOutOfRange("tuple entry " + std::to_string(v) + " outside 0.." + std::to_string(dimV_ - 1));
        int sign = 1;
        // insertion sort, counting transpositions
        for (std::size_t i = 1; i < a.size(); ++i)
            for (std::size_t j = i; j > 0 && a[j - 1] >= a[j]; --j) {
                if (a[j - 1] == a[j]) return std::nullopt;
                std::swap(a[j - 1], a[j]);
                sign = -sign;
            }
        return std::make_pair(index_.at(a), sign);
    }

    /// "z_0_2_3"
    std::string name(std::size_t k) const {
        std::string out = "z";
        for (int v : tuples_[k]) out += "_" + std::to_string(v);
        return out;
    }

    VariableResolver resolver() const {
        return [this](std::string_view s) -> std::optional<int> {
            if (s.size() < 1 || s[0] != 'z') return std::nullopt;
            std::vector<int> t;
            std::size_t pos = 1;
            while (pos < s.size()) {
                if (s[pos] != '_') return std::nullopt;
                ++pos;
                const std::size_t start = pos;
                int v = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
                if (pos == start) return std::nullopt;
                t.push_back(v);
            }
            auto it = index_.find(t);
            if (it == index_.end()) throw VariableOutOfRange("unknown Plücker variable " + std::string(s));
            return static_cast<int>(it->second);
        };
    }

private:
    int n_;
    int dimV_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// Sparse linear form in Plücker variables, sorted by variable index.
template <Field F>
struct LinearForm {
    std::vector<std::pair<std::size_t, F>> terms;

    bool is_zero() const { return terms.empty(); }

    static LinearForm variable(std::size_t v, int sign) { return LinearForm{{{v, F(static_cast<long>(sign))}}}; }

    F evaluate(const std::vector<F>& z) const {
        F acc;
        for (const auto& [v, c] : terms) acc += c * z[v];
        return acc;
    }

    LinearForm negated() const {
        LinearForm out = *this;
        for (auto& t : out.terms) t.second = -t.second;
        return out;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.terms.size() == b.terms.size() &&
               std::equal(a.terms.begin(), a.terms.end(), b.terms.begin(),
                          [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
    }

    Polynomial<F> to_polynomial(std::size_t nvars) const {
        std::vector<typename Polynomial<F>::Term> out;
        for (const auto& [v, c] : terms) {
            std::vector<int> e(nvars, 0);
            e[v] = 1;
            out.emplace_back(Monomial(std::move(e)), c);
        }
        return Polynomial<F>(static_cast<int>(nvars) - 1, std::move(out));
    }
};

/// Where a column of L or Lambda came from.
struct ColumnOrigin {
    int block = -1;      // index of u_i for Lambda columns, -1 for L
    std::vector<int> b;  // the tuple b of K_b
    int slot = 0;        // column j of K_b
    int sign = 1;        // column equals sign * (K_b column j)
};

template <Field F>
struct SymbolicMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<LinearForm<F>>> columns;  // columns[c][row]
    std::vector<ColumnOrigin> origins;

    std::size_t cols() const { return columns.size(); }
    const LinearForm<F>& at(std::size_t row, std::size_t col) const { return columns[col][row]; }

    Matrix<F> evaluate(const std::vector<F>& z) const {
        Matrix<F> out(rows, cols());
        for (std::size_t c = 0; c < cols(); ++c)
            for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r].evaluate(z);
        return out;
    }
};

/// K_a = (z_{a[j -> i]})_{i < dimV, j < n}.
template <Field F>
SymbolicMatrix<F> k_matrix(const PluckerIndex& P, const std::vector<int>& a) {
    const int n = P.n();
    const int dimV = P.dimV();
    if (static_cast<int>(a.size()) != n) throw IndexOutOfRange("tuple length differs from n");
    for (int v : a)
        if (v < 0 || v >= dimV) throw IndexOutOfRange("tuple entry " + std::to_string(v) + " outside 0.." + std::to_string(dimV - 1));
    SymbolicMatrix<F> K;
    K.rows = static_cast<std::size_t>(dimV);
    for (int j = 0; j < n; ++j) {
        std::vector<LinearForm<F>> col(static_cast<std::size_t>(dimV));
        for (int i = 0; i < dimV; ++i) {
            std::vector<int> sub = a;
            sub[static_cast<std::size_t>(j)] = i;
            if (auto c = P.canonical(sub)) col[static_cast<std::size_t>(i)] = LinearForm<F>::variable(c->first, c->second);
        }
        K.columns.push_back(std::move(col));
        K.origins.push_back({-1, a, j, 1});
    }
    return K;
}

enum class ColumnDedup { none, exact, up_to_sign };

struct LMatrixOptions {
    std::size_t column_budget = 100'000;
    ColumnDedup dedup = ColumnDedup::exact;
};

namespace detail {

template <Field F>
bool is_zero_column(const std::vector<LinearForm<F>>& col) {
    return std::all_of(col.begin(), col.end(), [](const auto& e) { return e.is_zero(); });
}

template <Field F>
std::vector<LinearForm<F>> negate_column(const std::vector<LinearForm<F>>& col) {
    std::vector<LinearForm<F>> out;
    out.reserve(col.size());
    for (const auto& e : col) out.push_back(e.negated());
    return out;
}

/// Ordering key for column dedup.
template <Field F>
std::vector<std::string> column_key(const std::vector<LinearForm<F>>& col) {
    std::vector<std::string> key;
    key.reserve(col.size());
    for (const auto& e : col) {
        std::string s;
        for (const auto& [v, c] : e.terms) s += std::to_string(v) + ":" + c.to_string() + ",";
        key.push_back(std::move(s));
    }
    return key;
}

template <Field F>
void dedup_columns(SymbolicMatrix<F>& M, ColumnDedup mode) {
    if (mode == ColumnDedup::none) return;
    SymbolicMatrix<F> out;
    out.rows = M.rows;
    std::set<std::vector<std::string>> seen;
    for (std::size_t c = 0; c < M.cols(); ++c) {
        const auto& col = M.columns[c];
        if (is_zero_column(col)) continue;
        auto key = column_key(col);
        if (seen.contains(key)) continue;
        if (mode == ColumnDedup::up_to_sign && seen.contains(column_key(negate_column(col)))) continue;
        seen.insert(std::move(key));
        out.columns.push_back(col);
        out.origins.push_back(M.origins[c]);
    }
    M = std::move(out);
}

}  // namespace detail

/// L = (K_{b_0} | ... ) over all tuples b: {0..n-1} -> {0..dimV-1}.
template <Field F>
SymbolicMatrix<F> l_matrix(const PluckerIndex& P, const LMatrixOptions& options = {}) {
    const int n = P.n();
    const int dimV = P.dimV();
    const BigInt before = BigInt(n) * pow(BigInt(dimV), static_cast<unsigned long>(n));
    if (before > BigInt(static_cast<unsigned long>(options.column_budget)))
        throw ColumnBudgetExceeded("L would have " + to_string(before) + " columns before dedup (budget " +
                                   std::to_string(options.column_budget) + ")");
    SymbolicMatrix<F> L;
    L.rows = static_cast<std::size_t>(dimV);
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (;;) {
        auto K = k_matrix<F>(P, b);
        for (std::size_t c = 0; c < K.cols(); ++c) {
            L.columns.push_back(std::move(K.columns[c]));
            L.origins.push_back(K.origins[c]);
        }
        int pos = n - 1;
        while (pos >= 0 && ++b[static_cast<std::size_t>(pos)] == dimV) b[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    detail::dedup_columns(L, options.dedup);
    return L;
}

/// Lambda = (u_0(L) | ... | u_{q-1}(L)) for linear maps u_i: V -> W given as dimW x dimV matrices.
template <Field F>
SymbolicMatrix<F> lambda_matrix(const SymbolicMatrix<F>& L, const std::vector<Matrix<F>>& u, ColumnDedup dedup) {
    SymbolicMatrix<F> out;
    if (u.empty()) return out;
    out.rows = u.front().rows();
    for (std::size_t blk = 0; blk < u.size(); ++blk) {
        const auto& U = u[blk];
        if (U.cols() != L.rows || U.rows() != out.rows) throw DimensionMismatch("linear map has the wrong shape");
        for (std::size_t c = 0; c < L.cols(); ++c) {
            std::vector<LinearForm<F>> col(out.rows);
            for (std::size_t w = 0; w < out.rows; ++w) {
                std::map<std::size_t, F> acc;
                for (std::size_t v = 0; v < L.rows; ++v) {
                    const F& a = U(w, v);
                    if (a.is_zero()) continue;
                    for (const auto& [var, coef] : L.at(v, c).terms) acc[var] += a * coef;
                }
                for (auto& [var, coef] : acc)
                    if (!coef.is_zero()) col[w].terms.emplace_back(var, coef);
            }
            out.columns.push_back(std::move(col));
            ColumnOrigin o = L.origins[c];
            o.block = static_cast<int>(blk);
            out.origins.push_back(std::move(o));
        }
    }
    detail::dedup_columns(out, dedup);
    return out;
}

struct FittingOptions {
    std::size_t minor_budget = 1'000'000;
    std::size_t column_budget = 100'000;
    ColumnDedup dedup = ColumnDedup::up_to_sign;
};

/// Determinant of the square submatrix on (rows, cols), expanded symbolically column by
/// column over subsets of rows.
template <Field F>
Polynomial<F> symbolic_minor(const SymbolicMatrix<F>& M, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols, std::size_t nvars) {
    const std::size_t m = rows.size();
    if (cols.size() != m) throw DimensionMismatch("minor needs as many rows as columns");
    if (m == 0) return Polynomial<F>::constant(static_cast<int>(nvars) - 1, F(1L));
    if (m > 24) throw ScaleExceeded("minor too large for subset expansion");
    std::vector<Polynomial<F>> entry(m * m, Polynomial<F>(static_cast<int>(nvars) - 1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) entry[i * m + j] = M.at(rows[i], cols[j]).to_polynomial(nvars);
    // D[S] = det of the rows in S against the first |S| columns
    std::map<std::uint32_t, Polynomial<F>> D;
    D.emplace(0u, Polynomial<F>::constant(static_cast<int>(nvars) - 1, F(1L)));
    for (std::size_t j = 0; j < m; ++j) {
        std::map<std::uint32_t, Polynomial<F>> next;
        for (const auto& [S, det] : D) {
            if (det.is_zero()) continue;
            int above = 0;  // rows of S below i give the cofactor sign
            for (std::size_t i = 0; i < m; ++i) {
                if (S & (1u << i)) {
                    ++above;
                    continue;
                }
                const auto& e = entry[i * m + j];
                if (e.is_zero()) continue;
                // row i is placed last among S ∪ {i}: sign (-1)^(#rows of S after i)
                const int after = static_cast<int>(j) - above;
                Polynomial<F> term = e * det;
                if (after % 2) term = -term;
                auto [it, inserted] = next.try_emplace(S | (1u << i), term);
                if (!inserted) it->second = it->second + term;
            }
        }
        D = std::move(next);
    }
    auto it = D.find((m >= 32 ? 0u : (1u << m)) - 1u);
    return it == D.end() ? Polynomial<F>(static_cast<int>(nvars) - 1) : it->second;
}

/// The Fitting condition "all m x m minors of Lambda vanish", held implicitly.
///
/// Explicit minors are produced only within the minor budget. Pointwise
/// vanishing is decided exactly by rank(Lambda(z)) < m, which is equivalent to
/// the vanishing of every m x m minor.
template <Field F>
struct FittingSystem {
    std::size_t m = 0;
    std::size_t nvars = 0;
    SymbolicMatrix<F> lambda;
    BigInt columns_before_dedup;

    BigInt minor_count() const {
        if (m > lambda.rows || m > lambda.cols()) return 0;
        return nstor::binomial(static_cast<long>(lambda.rows), m) * nstor::binomial(static_cast<long>(lambda.cols()), m);
    }

    bool vanishes_at(const std::vector<F>& z) const {
        if (m > lambda.rows || m > lambda.cols()) return true;
        return rank(lambda.evaluate(z)) < m;
    }

    /// Rank of Lambda at z (m - 1 or less means the point satisfies the condition).
    std::size_t rank_at(const std::vector<F>& z) const { return rank(lambda.evaluate(z)); }

    /// Every entry of Lambda is a homogeneous linear form (or zero).
    bool entries_linear() const {
        for (const auto& col : lambda.columns)
            for (const auto& e : col)
                for (const auto& [v, c] : e.terms)
                    if (v >= nvars || c.is_zero()) return false;
        return true;
    }

    Polynomial<F> minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        return symbolic_minor(lambda, rows, cols, nvars);
    }

    /// All nonzero m x m minors, rows-subset then column-subset lexicographic.
    std::vector<Polynomial<F>> enumerate(std::size_t budget) const {
        std::vector<Polynomial<F>> out;
        const BigInt count = minor_count();
        if (count == 0) return out;
        if (count > BigInt(static_cast<unsigned long>(budget)))
            throw MinorBudgetExceeded(to_string(count) + " minors exceed the budget of " + std::to_string(budget));
        for_each_subset(lambda.rows, m, [&](const std::vector<std::size_t>& rs) {
            for_each_subset(lambda.cols(), m, [&](const std::vector<std::size_t>& cs) {
                auto p = minor(rs, cs);
                if (!p.is_zero()) out.push_back(std::move(p));
            });
        });
        return out;
    }

    /// Visits every minor including zeros; used for raw (undeduplicated) audits.
    template <typename Visit>
    void visit_minors(std::size_t budget, Visit&& f) const {
        const BigInt count = minor_count();
        if (count > BigInt(static_cast<unsigned long>(budget)))
            throw MinorBudgetExceeded(to_string(count) + " minors exceed the budget of " + std::to_string(budget));
        if (count == 0) return;
        for_each_subset(lambda.rows, m, [&](const std::vector<std::size_t>& rs) {
            for_each_subset(lambda.cols(), m, [&](const std::vector<std::size_t>& cs) { f(rs, cs, minor(rs, cs)); });
        });
    }

    /// Seeded random sample of minors (row and column subsets drawn uniformly).
    std::vector<Polynomial<F>> sample(std::size_t count, std::uint64_t seed) const {
        std::vector<Polynomial<F>> out;
        if (minor_count() == 0) return out;
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < count; ++k)
            out.push_back(minor(random_subset(rng, lambda.rows, m), random_subset(rng, lambda.cols(), m)));
        return out;
    }

    template <typename Visit>
    static void for_each_subset(std::size_t n, std::size_t k, Visit&& f) {
        std::vector<std::size_t> s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = i;
        if (k > n) return;
        for (;;) {
            f(s);
            std::size_t i = k;
            while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) return;
            ++s[i - 1];
            for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
        }
    }

    static std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        all.resize(k);
        std::sort(all.begin(), all.end());
        return all;
    }
};

template <Field F>
FittingSystem<F> fitting_system(const PluckerIndex& P, const std::vector<Matrix<F>>& u, std::size_t m,
                                const FittingOptions& options = {}) {
    FittingSystem<F> sys;
    sys.m = m;
    sys.nvars = P.size();
    sys.columns_before_dedup = BigInt(static_cast<unsigned long>(u.size())) * P.n() *
                               pow(BigInt(P.dimV()), static_cast<unsigned long>(P.n()));
    const auto L = l_matrix<F>(P, {options.column_budget, options.dedup});
    sys.lambda = lambda_matrix(L, u, options.dedup);
    return sys;
}

/// All nonzero m x m minors of Lambda as Plücker polynomials.
template <Field F>
std::vector<Polynomial<F>> fitting_equations(const PluckerIndex& P, const std::vector<Matrix<F>>& u, std::size_t m,
                                             const FittingOptions& options = {}) {
    return fitting_system(P, u, m, options).enumerate(options.minor_budget);
}

/// For each u in U and each increasing (n+1)-tuple c: sum_j (-1)^j u_{c(j)} z_{c minus c(j)}.
template <Field F>
std::vector<Polynomial<F>> linear_conditions(const PluckerIndex& P, const std::vector<std::vector<F>>& U) {
    std::vector<Polynomial<F>> out;
    const int n = P.n();
    const int dimV = P.dimV();
    const std::size_t N = P.size();
    if (n + 1 > dimV) {
        // no (n+1)-tuples: the only n-plane is V itself, which contains every u
        return out;
    }
    const PluckerIndex C(n + 1, dimV);
    for (const auto& u : U) {
        if (static_cast<int>(u.size()) != dimV) throw DimensionMismatch("vector length differs from dim V");
        for (std::size_t k = 0; k < C.size(); ++k) {
            const auto& c = C.tuple(k);
            std::vector<std::pair<std::size_t, F>> acc;
            for (int j = 0; j <= n; ++j) {
                const F& coef = u[static_cast<std::size_t>(c[static_cast<std::size_t>(j)])];
                if (coef.is_zero()) continue;
                std::vector<int> rest;
                for (int l = 0; l <= n; ++l)
                    if (l != j) rest.push_back(c[static_cast<std::size_t>(l)]);
                acc.emplace_back(P.index(rest), j % 2 ? -coef : coef);
            }
            LinearForm<F> form;
            std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            form.terms = std::move(acc);
            auto p = form.to_polynomial(N);
            if (!p.is_zero()) out.push_back(std::move(p));
        }
    }
    return out;
}

namespace detail {

/// Scales so the leading coefficient is positive, for dedup up to sign.
template <Field F>
Polynomial<F> sign_normalized(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    const std::string lc = p.terms().front().second.to_string();
    return (!lc.empty() && lc[0] == '-') ? -p : p;
}

}  // namespace detail

/// Plücker relations sum_k (-1)^k z_{I, j_k} z_{J minus j_k} for (n-1)-subsets I and
/// (n+1)-subsets J; zero relations dropped, duplicates up to sign removed.
template <Field F>
std::vector<Polynomial<F>> plucker_quadrics(const PluckerIndex& P, std::size_t budget = 1'000'000) {
    std::vector<Polynomial<F>> out;
    const int n = P.n();
    const int dimV = P.dimV();
    if (n < 1 || n + 1 > dimV) return out;
    const PluckerIndex Is(n - 1, dimV);
    const PluckerIndex Js(n + 1, dimV);
    if (BigInt(static_cast<unsigned long>(Is.size())) * static_cast<unsigned long>(Js.size()) >
        BigInt(static_cast<unsigned long>(budget)))
        throw MinorBudgetExceeded("too many Plücker relations for the budget");
    const std::size_t N = P.size();
    std::set<std::vector<std::pair<std::vector<int>, std::string>>> seen;
    for (std::size_t a = 0; a < Is.size(); ++a)
        for (std::size_t b = 0; b < Js.size(); ++b) {
            const auto& I = Is.tuple(a);
            const auto& J = Js.tuple(b);
            std::vector<typename Polynomial<F>::Term> terms;
            for (int k = 0; k <= n; ++k) {
                std::vector<int> left = I;
                left.push_back(J[static_cast<std::size_t>(k)]);
                std::vector<int> right;
                for (int l = 0; l <= n; ++l)
                    if (l != k) right.push_back(J[static_cast<std::size_t>(l)]);
                const auto cl = P.canonical(left);
                if (!cl) continue;
                const std::size_t cr = P.index(right);
                std::vector<int> e(N, 0);
                e[cl->first] += 1;
                e[cr] += 1;
                const int sign = cl->second * (k % 2 ? -1 : 1);
                terms.emplace_back(Monomial(std::move(e)), F(static_cast<long>(sign)));
            }
            Polynomial<F> q(static_cast<int>(N) - 1, std::move(terms));
            if (q.is_zero()) continue;
            q = detail::sign_normalized(q);
            std::vector<std::pair<std::vector<int>, std::string>> key;
            for (const auto& [mono, c] : q.terms())
                key.emplace_back(std::vector<int>(mono.exponents().begin(), mono.exponents().end()), c.to_string());
            if (seen.insert(std::move(key)).second) out.push_back(std::move(q));
        }
    return out;
}

/// Coordinates of a vector of R_t in the grevlex-descending monomial basis.
template <Field F>
std::vector<F> coordinates(const Polynomial<F>& p, const std::vector<Monomial>& basis) {
    std::vector<F> out(basis.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end()) throw DimensionMismatch("term " + m.to_string() + " outside the graded piece");
        out[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return out;
}

/// Basis of (I)_t as coordinate vectors over R_t: w - NF(w) for each degree-t monomial w of in(I).
template <Field F>
std::vector<std::vector<F>> ideal_piece_basis(const IdealPresentation<F>& I, int t, const GroebnerOptions& options = {}) {
    const auto basis = monomials_of_degree(I.r, t);
    std::vector<std::vector<F>> out;
    if (I.generators.empty()) return out;
    const auto gb = buchberger(I, MonomialOrder::grevlex, options);
    const MonomialIdeal in = gb.initial_ideal();
    for (const auto& w : basis) {
        if (!in.contains(w)) continue;
        const auto mono = Polynomial<F>::monomial(w);
        out.push_back(coordinates(mono - gb.normal_form(mono), basis));
    }
    return out;
}

/// Multiplication by x_i as a dim R_{t+1} x dim R_t matrix.
template <Field F>
Matrix<F> multiplication_matrix(int r, int t, int i) {
    const auto V = monomials_of_degree(r, t);
    const auto W = monomials_of_degree(r, t + 1);
    Matrix<F> out(W.size(), V.size());
    for (std::size_t v = 0; v < V.size(); ++v) {
        const Monomial w = V[v].times_variable(i);
        const auto it = std::find(W.begin(), W.end(), w);
        out(static_cast<std::size_t>(it - W.begin()), v) = F(1L);
    }
    return out;
}

/// Plücker coordinates of the row span of an n x dimV matrix, first nonzero coordinate scaled to 1.
template <Field F>
std::vector<F> plucker_coordinates(const PluckerIndex& P, const std::vector<std::vector<F>>& rows) {
    if (static_cast<int>(rows.size()) != P.n())
        throw WrongDimension("subspace has dimension " + std::to_string(rows.size()) + ", expected " + std::to_string(P.n()));
    Matrix<F> A(0, static_cast<std::size_t>(P.dimV()));
    for (const auto& r : rows) A.append_row(r);
    std::vector<F> z(P.size());
    std::vector<std::size_t> all_rows(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) all_rows[i] = i;
    for (std::size_t k = 0; k < P.size(); ++k) {
        std::vector<std::size_t> cols(P.tuple(k).begin(), P.tuple(k).end());
        z[k] = determinant(A.select(all_rows, cols));
    }
    auto first = std::find_if(z.begin(), z.end(), [](const F& v) { return !v.is_zero(); });
    if (first == z.end()) throw WrongDimension("rows are linearly dependent");
    const F inv = first->inverse();
    for (auto& v : z) v = v * inv;
    return z;
}

struct HilbOptions {
    bool allow_small_t = false;
    std::size_t max_dim_v = 12;
    FittingOptions fitting;
    std::size_t quadric_budget = 1'000'000;
    GroebnerOptions groebner;
};

/// Defining equations of Hilb^P X in P(wedge^{P(t)} R_t), P = C(t+r,r) - Q.
template <Field F>
struct HilbEquations {
    int r = 0;
    int t = 0;
    HilbertPolynomial Q;
    HilbertPolynomial P;
    int dim_v = 0;
    int dim_w = 0;
    int n = 0;      // P(t)
    int m = 0;      // P(t+1) + 1
    std::size_t gotzmann_number = 0;
    int d = 0;
    std::vector<std::string> warnings;

    PluckerIndex index{0, 1};
    std::vector<Monomial> basis_v;
    std::vector<Polynomial<F>> plucker_quadrics;
    FittingSystem<F> fitting;
    bool minors_enumerated = false;
    std::vector<Polynomial<F>> fitting_minors;
    std::vector<std::vector<F>> U;  // basis of (I_X)_t
    std::vector<Polynomial<F>> linear_conditions;

    struct PointCheck {
        bool quadrics = true;  // point lies on the Grassmannian
        bool fitting = true;   // condition (a)
        bool linear = true;    // condition (b)
        std::size_t lambda_rank = 0;
        bool accepted() const { return quadrics && fitting && linear; }
    };

    PointCheck check(const std::vector<F>& z) const {
        PointCheck out;
        for (const auto& q : plucker_quadrics)
            if (!q.evaluate(z).is_zero()) out.quadrics = false;
        out.lambda_rank = fitting.rank_at(z);
        out.fitting = fitting.vanishes_at(z);
        for (const auto& l : linear_conditions)
            if (!l.evaluate(z).is_zero()) out.linear = false;
        return out;
    }
};

template <Field F>
HilbEquations<F> hilb_equations(int r, int t, const HilbertPolynomial& Q, const std::optional<IdealPresentation<F>>& X,
                                const HilbOptions& options = {}) {
    if (r < 1) throw InputError("r must be at least 1");
    if (t < 0) throw InputError("t must be nonnegative");
    HilbEquations<F> out;
    out.r = r;
    out.t = t;
    out.Q = Q;
    out.P = complement_in_ambient(Q, r);
    const BigInt dv = nstor::binomial(static_cast<long>(t + r), static_cast<unsigned long>(r));
    if (dv > BigInt(static_cast<unsigned long>(options.max_dim_v)))
        throw ScaleExceeded("dim R_t = " + to_string(dv) + " exceeds the desk-scale limit " + std::to_string(options.max_dim_v));
    out.dim_v = static_cast<int>(dv.get_si());
    out.dim_w = static_cast<int>(nstor::binomial(static_cast<long>(t + 1 + r), static_cast<unsigned long>(r)).get_si());
    const BigInt n = out.P.at(t);
    const BigInt p1 = out.P.at(t + 1);
    if (n < 0 || n > out.dim_v) throw InputError("P(t) = " + to_string(n) + " is outside 0..dim R_t");
    out.n = static_cast<int>(n.get_si());
    out.m = static_cast<int>(p1.get_si()) + 1;

    out.gotzmann_number = gotzmann_decompose(Q).s();
    out.d = X ? std::max(1, X->d()) : 1;
    if (X && X->r != r) throw DimensionMismatch("X lives in a different ring");
    const long need = std::max<long>(static_cast<long>(out.gotzmann_number), out.d);
    if (t < need) {
        const std::string msg = "t = " + std::to_string(t) + " is below max(Gotzmann number, d) = " + std::to_string(need);
        if (!options.allow_small_t) throw InputError(msg);
        out.warnings.push_back(msg);
    }

    out.index = PluckerIndex(out.n, out.dim_v);
    out.basis_v = monomials_of_degree(r, t);
    std::vector<Matrix<F>> u;
    for (int i = 0; i <= r; ++i) u.push_back(multiplication_matrix<F>(r, t, i));
    out.plucker_quadrics = plucker_quadrics<F>(out.index, options.quadric_budget);
    out.fitting = fitting_system(out.index, u, static_cast<std::size_t>(out.m), options.fitting);
    if (out.fitting.minor_count() <= BigInt(static_cast<unsigned long>(options.fitting.minor_budget))) {
        out.fitting_minors = out.fitting.enumerate(options.fitting.minor_budget);
        out.minors_enumerated = true;
    }
    if (X) {
        out.U = ideal_piece_basis(*X, t, options.groebner);
        out.linear_conditions = linear_conditions(out.index, out.U);
    }
    return out;
}

/// Plücker point of (I_Z)_t in P(wedge^n R_t).
template <Field F>
std::vector<F> plucker_point_of_subscheme(const IdealPresentation<F>& Z, int t, std::optional<int> expected_n = {},
                                          const GroebnerOptions& options = {}) {
    const auto rows = ideal_piece_basis(Z, t, options);
    const int dimV = static_cast<int>(monomials_of_degree(Z.r, t).size());
    if (expected_n && static_cast<int>(rows.size()) != *expected_n)
        throw WrongDimension("dim (I_Z)_t = " + std::to_string(rows.size()) + " but the Grassmannian expects " +
                             std::to_string(*expected_n));
    if (rows.empty()) throw WrongDimension("(I_Z)_t is zero");
    return plucker_coordinates(PluckerIndex(static_cast<int>(rows.size()), dimV), rows);
}

/// Text line for export ("3*z_0_1^2 - z_1_2*z_0_2"); rational coefficients are cleared to integers.
template <Field F>
std::string export_line(const Polynomial<F>& p, const PluckerIndex& P) {
    auto name = [&](int i) { return P.name(static_cast<std::size_t>(i)); };
    if constexpr (std::is_same_v<F, Rational>) {
        BigInt den = 1;
        for (const auto& [m, c] : p.terms()) den = lcm(den, c.denominator());
        return p.scaled(Rational(den)).to_string(name);
    } else {
        return p.to_string(name);
    }
}

/// Reads an exported equation file back (one polynomial per line).
template <Field F>
std::vector<Polynomial<F>> read_equations(std::string_view text, const PluckerIndex& P) {
    return parse_polynomial_lines<F>(text, static_cast<int>(P.size()), P.resolver());
}

}  // namespace nstor
