#pragma once

// Text grammar for ideals: one polynomial per line, integer coefficients,
// variables x0..xr, operators + - * ^, parentheses, '#' to end of line.

#include "nstor/errors.hpp"
#include "nstor/polynomial.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace nstor {

/// Maps an identifier to a variable index, or returns nullopt if unknown.
using VariableResolver = std::function<std::optional<int>(std::string_view)>;

/// Accepts exactly x0..xr. Names beyond r raise VariableOutOfRange.
inline VariableResolver x_variables(int r) {
    return [r](std::string_view name) -> std::optional<int> {
        if (name.size() < 2 || name[0] != 'x') return std::nullopt;
        int idx = 0;
        for (char c : name.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            idx = idx * 10 + (c - '0');
            if (idx > 1'000'000) break;
        }
        if (name.size() > 2 && name[1] == '0') return std::nullopt;
        if (idx > r) throw VariableOutOfRange("variable " + std::string(name) + " outside x0..x" + std::to_string(r));
        return idx;
    };
}

namespace detail {

template <Field F>
class LineParser {
public:
    LineParser(std::string_view text, int nvars, const VariableResolver& resolve, std::size_t line)
        : s_(text), nvars_(nvars), resolve_(resolve), line_(line) {}

    Polynomial<F> parse() {
        skip_ws();
        Polynomial<F> p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, line_, pos_ + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial<F> expr() {
        Polynomial<F> acc = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Polynomial<F> term() {
        Polynomial<F> acc = power();
        while (eat('*')) acc = acc * power();
        return acc;
    }

    Polynomial<F> power() {
        Polynomial<F> base = atom();
        if (eat('^')) {
            skip_ws();
            const std::size_t start = pos_;
            BigInt e = integer_literal();
            if (!e.fits_sint_p() || e > 10'000) {
                pos_ = start;
                fail("exponent too large");
            }
            base = base.pow(static_cast<int>(e.get_si()));
        }
        return base;
    }

    Polynomial<F> atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial<F> inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial<F>::constant(nvars_ - 1, F(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            std::optional<int> idx;
            try {
                idx = resolve_(name);
            } catch (const VariableOutOfRange& e) {
                throw VariableOutOfRange("line " + std::to_string(line_) + ", column " + std::to_string(start + 1) + ": " +
                                         e.what());
            }
            if (!idx) {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            return Polynomial<F>::variable(nvars_ - 1, *idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    BigInt integer_literal() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int nvars_;
    const VariableResolver& resolve_;
    std::size_t line_;
};

inline std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

inline bool is_blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

/// Parses one polynomial in nvars variables named by the resolver.
template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, int nvars, const VariableResolver& resolve, std::size_t line = 1) {
    return detail::LineParser<F>(detail::strip_comment(text), nvars, resolve, line).parse();
}

template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, int r) {
    return parse_polynomial<F>(text, r + 1, x_variables(r));
}

/// Parses a whole file of generators (blank and comment-only lines are skipped).
template <Field F>
std::vector<Polynomial<F>> parse_polynomial_lines(std::string_view text, int nvars, const VariableResolver& resolve) {
    std::vector<Polynomial<F>> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const std::string_view line = detail::strip_comment(text.substr(start, end - start));
        if (!detail::is_blank(line)) out.push_back(detail::LineParser<F>(line, nvars, resolve, line_no).parse());
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

template <Field F>
IdealPresentation<F> parse_ideal(std::string_view text, int r) {
    if (r < 0) throw InputError("r must be nonnegative");
    IdealPresentation<F> out{r, {}};
    std::size_t line_no = 0;
    std::size_t start = 0;
    const VariableResolver resolve = x_variables(r);
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const std::string_view line = detail::strip_comment(text.substr(start, end - start));
        if (!detail::is_blank(line)) {
            Polynomial<F> g = detail::LineParser<F>(line, r + 1, resolve, line_no).parse();
            if (g.is_zero()) throw ZeroGenerator("generator is zero", line_no);
            if (!g.is_homogeneous())
                throw InhomogeneousGenerator("generator " + g.to_string() + " is not homogeneous", line_no);
            out.generators.push_back(std::move(g));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace nstor
