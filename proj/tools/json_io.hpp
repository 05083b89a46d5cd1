#pragma once

// JSON conversions for CLI payloads. Big integers and rationals are strings.

#include "nstor/corpus.hpp"
#include "nstor/gotzmann.hpp"
#include "nstor/grassmann.hpp"
#include "nstor/mono_gamma.hpp"
#include "nstor/parse.hpp"
#include "nstor/tower.hpp"

#include <json.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace nstor::cli {

using json = nlohmann::json;

inline json to_json(const BigInt& v) { return to_string(v); }
inline json to_json(const BigRational& v) { return to_string(v); }

inline json to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(g.to_string());
    return gens;
}

inline json to_json(const HilbertPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
    return {{"text", p.to_string()}, {"coefficients", coeffs}, {"degree", p.degree()}};
}

inline json to_json(const GammaTrace& node) {
    json out{{"path", node.path.empty() ? "/" : node.path},
             {"kind", GammaTrace::kind_name(node.kind)},
             {"m", node.m.to_string()},
             {"ideal", to_json(node.I)},
             {"m_count", node.m_count},
             {"mu", node.mu},
             {"leaf_sum", to_json(node.leaf_sum)},
             {"majorant", to_json(node.majorant)}};
    if (node.kind == GammaTrace::Kind::base_case) {
        out["vars"] = node.vars;
        out["b"] = node.b;
        out["a"] = node.a;
    }
    if (node.choice) {
        out["split"] = {{"generator", node.choice->generator.to_string()},
                        {"variable", node.choice->variable},
                        {"exponent", node.choice->exponent}};
        json kids = json::array();
        for (const auto& c : node.children) kids.push_back(to_json(c));
        out["children"] = kids;
    }
    return out;
}

inline json to_json(const SectionResult& s) {
    json probes = json::array();
    for (const auto& [t, v] : s.probes) probes.push_back({t, v});
    return {{"dim_gamma", s.value}, {"threshold", s.threshold}, {"probes", probes}};
}

inline json to_json(const GammaAudit& a) {
    json viol = json::array();
    for (const auto& v : a.violations)
        viol.push_back({{"path", v.path}, {"kind", v.kind}, {"value", to_json(v.value)}, {"majorant", to_json(v.majorant)}});
    return {{"exact", a.exact},
            {"leaf_sum", to_json(a.leaf_sum)},
            {"root_majorant", to_json(a.majorant)},
            {"d_pow_r", to_json(a.d_pow_r)},
            {"exact_le_leaf_sum", a.exact_le_leaf_sum},
            {"exact_le_d_pow_r", a.exact_le_d_pow_r},
            {"nodes", a.nodes},
            {"majorant_violations", viol}};
}

/// Finite long doubles become numbers; anything else a string.
inline json real_json(long double v) {
    if (std::isfinite(v)) return static_cast<double>(v);
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

inline json to_json(const TowerNumber& t) {
    json out{{"render", t.render()}, {"h", t.height()}, {"x", real_json(t.top())}, {"rel_error", real_json(t.rel_error())}};
    if (t.exact()) out["exact"] = to_json(*t.exact());
    return out;
}

inline json to_json(const ChainAudit& a) {
    json rows = json::array();
    for (const auto& s : a.steps)
        rows.push_back({{"step", s.step},
                        {"claim", s.claim},
                        {"lhs", s.lhs},
                        {"rhs", s.rhs},
                        {"mode", s.mode},
                        {"pass", s.pass},
                        {"level", s.level},
                        {"margin_log2", real_json(s.margin_log2)}});
    return {{"d", a.d}, {"r", a.r}, {"exact_t", a.exact_t}, {"all_pass", a.all_pass()}, {"steps", rows}};
}

template <Field F>
json to_json(const Polynomial<F>& p) {
    return p.to_string();
}

/// A Hilbert polynomial given as an expression in t ("2*t + 1") or a bracketed
/// power-basis coefficient list ("[1, 3/2, 1/2]").
inline HilbertPolynomial parse_hilbert_polynomial(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        const auto close = text.find(']', first);
        if (close == std::string::npos) throw SyntaxError("missing ']'", 1, static_cast<std::size_t>(text.size()) + 1);
        std::vector<BigRational> coeffs;
        std::size_t pos = first + 1;
        while (pos < close) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string::npos || comma > close) comma = close;
            std::string item = text.substr(pos, comma - pos);
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            BigRational v;
            if (item.empty() || v.set_str(item, 10) != 0)
                throw SyntaxError("bad coefficient '" + item + "'", 1, pos + 1);
            v.canonicalize();
            coeffs.push_back(v);
            pos = comma + 1;
        }
        return HilbertPolynomial(std::move(coeffs));
    }
    const VariableResolver t_only = [](std::string_view s) -> std::optional<int> {
        if (s == "t") return 0;
        return std::nullopt;
    };
    const auto p = parse_polynomial<Rational>(text, 1, t_only);
    std::vector<BigRational> coeffs;
    for (const auto& [m, c] : p.terms()) {
        const auto k = static_cast<std::size_t>(m[0]);
        if (coeffs.size() <= k) coeffs.resize(k + 1, BigRational(0));
        coeffs[k] += c.value();
    }
    return HilbertPolynomial(std::move(coeffs));
}

}  // namespace nstor::cli
