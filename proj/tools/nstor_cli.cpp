// nstor: command-line front end. Every command prints one JSON envelope on
// stdout (or a flat table with --human). Exit codes: 0 ok, 2 bad input,
// 3 resource cap.

#include "json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace nstor;
using nstor::cli::json;
using nstor::cli::to_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "0.1.0";

struct Common {
    bool human = false;
    bool timing = false;
};

struct IdealSource {
    std::string file;
    std::string gens;  // generators separated by ';'
    int r = -1;
    std::string field = "qq";
    std::string order = "grevlex";
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// The ideal text plus a label naming where it came from.
std::pair<std::string, std::string> ideal_text(const IdealSource& s) {
    if (!s.file.empty() && !s.gens.empty()) throw InputError("give --ideal or --gens, not both");
    if (!s.file.empty()) return {read_file(s.file), s.file};
    std::string text = s.gens;
    for (char& c : text)
        if (c == ';') c = '\n';
    return {text, "--gens"};
}

template <Field F>
IdealPresentation<F> load_ideal(const IdealSource& s) {
    if (s.r < 0) throw InputError("--r is required");
    const auto [text, label] = ideal_text(s);
    try {
        return parse_ideal<F>(text, s.r);
    } catch (const InputError& e) {
        throw InputError(label + ": " + e.what());
    }
}

/// Runs body<F> for the field named by --field.
template <typename Body>
json with_field(const std::string& field, Body&& body) {
    if (field == "qq" || field == "QQ") return body.template operator()<Rational>();
    if (field == "gf32003" || field == "GF32003") return body.template operator()<Fp>();
    throw InputError("unknown field '" + field + "' (qq, gf32003)");
}

void add_ideal_options(CLI::App* sub, IdealSource& s, bool with_order) {
    sub->add_option("--r", s.r, "projective dimension r (variables x0..xr)")->required();
    sub->add_option("--ideal", s.file, "file with one homogeneous generator per line ('-' for stdin)");
    sub->add_option("--gens", s.gens, "generators inline, separated by ';'");
    sub->add_option("--field", s.field, "coefficient field: qq or gf32003")->capture_default_str();
    if (with_order) sub->add_option("--order", s.order, "monomial order: lex, grlex, grevlex")->capture_default_str();
}

const char* gmp_version_string() { return ::gmp_version; }

void print_human(const json& env) {
    std::cout << "command: " << env["command"].get<std::string>() << "\n";
    const json& result = env["result"];
    std::size_t width = 0;
    for (const auto& [k, v] : result.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : result.items()) {
        std::cout << "  " << k << std::string(width - k.size() + 2, ' ');
        if (v.is_string())
            std::cout << v.get<std::string>();
        else
            std::cout << v.dump();
        std::cout << "\n";
    }
}

struct Command {
    std::string name;
    json parameters;
    std::function<json()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nstor: section-dimension bounds, Hilbert-scheme equations and torsion bound towers"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--human", common.human, "print a plain table instead of JSON");
    app.add_flag("--timing", common.timing, "include wall-clock timing in the envelope");

    Command cmd;

    // gamma-exact
    IdealSource ge;
    std::string ge_shift;
    int ge_tmax = 24;
    auto* s_ge = app.add_subcommand("gamma-exact", "exact dim of global sections of the structure sheaf of V(I), or of a monomial submodule (m)/I");
    add_ideal_options(s_ge, ge, false);
    s_ge->add_option("--shift", ge_shift, "monomial m for the submodule (m)/I (monomial ideals only)");
    s_ge->add_option("--t-max", ge_tmax, "largest degree probed before giving up")->capture_default_str();
    s_ge->callback([&] {
        cmd = {"gamma-exact", {{"r", ge.r}, {"field", ge.field}, {"shift", ge_shift}, {"t_max", ge_tmax}}, [&] {
                   return with_field(ge.field, [&]<Field F>() -> json {
                       const auto I = load_ideal<F>(ge);
                       SectionOptions so{ge_tmax};
                       json out;
                       if (!ge_shift.empty()) {
                           if (!I.is_monomial()) throw InputError("--shift needs a monomial ideal");
                           const auto m = parse_polynomial<F>(ge_shift, ge.r);
                           if (!m.is_monomial()) throw InputError("--shift: not a monomial");
                           out = to_json(gamma_exact_submodule(m.terms().front().first, MonomialIdeal::from_presentation(I), so));
                           out["route"] = "exchange";
                       } else {
                           out = to_json(gamma_exact(I, so));
                           out["route"] = I.is_monomial() ? "exchange" : "koszul";
                       }
                       return out;
                   });
               }};
    });

    // gamma-bound
    IdealSource gb;
    bool gb_trace = false;
    auto* s_gb = app.add_subcommand("gamma-bound", "recursive splitting bound on dim of global sections for monomial ideals; initial-ideal route and closed form otherwise");
    add_ideal_options(s_gb, gb, true);
    s_gb->add_flag("--trace", gb_trace, "include the recursion tree");
    s_gb->callback([&] {
        cmd = {"gamma-bound", {{"r", gb.r}, {"field", gb.field}, {"order", gb.order}}, [&] {
                   return with_field(gb.field, [&]<Field F>() -> json {
                       const auto I = load_ideal<F>(gb);
                       json out;
                       auto mono = [&](const MonomialGammaBound& b) {
                           json o{{"bound", to_json(b.bound)}, {"d", b.d}, {"d_pow_r", to_json(b.d_pow_r)},
                                  {"nodes", b.trace.node_count()}, {"depth", b.trace.depth()}};
                           if (gb_trace) o["trace"] = to_json(b.trace);
                           return o;
                       };
                       if (I.is_monomial()) {
                           out = mono(gamma_bound_monomial(MonomialIdeal::from_presentation(I)));
                           out["route"] = "monomial";
                       } else {
                           const auto rep = gamma_bound_general(I, parse_order(gb.order));
                           out = {{"route", "initial-ideal"},
                                  {"initial_ideal", to_json(rep.initial)},
                                  {"input_d", rep.input_d},
                                  {"sharp", mono(rep.sharp)},
                                  {"closed_form", to_json(rep.closed_form)}};
                       }
                       return out;
                   });
               }};
    });

    // gamma-audit
    IdealSource ga;
    std::string ga_shift;
    int ga_d = 0;
    auto* s_ga = app.add_subcommand("gamma-audit", "compare exact, recursion bound, d^r and the per-node #M/d majorant for (m)/I");
    add_ideal_options(s_ga, ga, false);
    s_ga->add_option("--shift", ga_shift, "monomial m (default 1)");
    s_ga->add_option("--d", ga_d, "box parameter d (default: max(1, largest generator degree))");
    s_ga->callback([&] {
        cmd = {"gamma-audit", {{"r", ga.r}, {"shift", ga_shift}, {"d", ga_d}}, [&] {
                   const auto I = load_ideal<Rational>(ga);
                   if (!I.is_monomial()) throw InputError("gamma-audit needs a monomial ideal");
                   const auto M = MonomialIdeal::from_presentation(I);
                   Monomial m = Monomial::one(ga.r);
                   if (!ga_shift.empty()) {
                       const auto p = parse_polynomial<Rational>(ga_shift, ga.r);
                       if (!p.is_monomial()) throw InputError("--shift: not a monomial");
                       m = p.terms().front().first;
                   }
                   const int d = ga_d > 0 ? ga_d : std::max(1, M.d());
                   return to_json(gamma_audit(ModulePresentation(m, M, d)));
               }};
    });

    // groebner
    IdealSource gr;
    int gr_cap = 64;
    auto* s_gr = app.add_subcommand("groebner", "reduced Groebner basis and initial ideal");
    add_ideal_options(s_gr, gr, true);
    s_gr->add_option("--degree-cap", gr_cap, "abort when an S-pair exceeds this degree")->capture_default_str();
    s_gr->callback([&] {
        cmd = {"groebner", {{"r", gr.r}, {"field", gr.field}, {"order", gr.order}, {"degree_cap", gr_cap}}, [&] {
                   return with_field(gr.field, [&]<Field F>() -> json {
                       const auto basis = buchberger(load_ideal<F>(gr), parse_order(gr.order), GroebnerOptions{gr_cap});
                       json elems = json::array();
                       for (const auto& g : basis.elements) elems.push_back(g.to_string());
                       json lms = json::array();
                       for (const auto& m : basis.leading_monomials()) lms.push_back(m.to_string());
                       return json{{"basis", elems}, {"leading_monomials", lms}, {"initial_ideal", to_json(basis.initial_ideal())}};
                   });
               }};
    });

    // hilbert
    IdealSource hi;
    int hi_tmax = 10;
    auto* s_hi = app.add_subcommand("hilbert", "Hilbert function, series numerator and Hilbert polynomial of R/I");
    add_ideal_options(s_hi, hi, false);
    s_hi->add_option("--t-max", hi_tmax, "tabulate the Hilbert function for t = 0..t-max")->capture_default_str();
    s_hi->callback([&] {
        cmd = {"hilbert", {{"r", hi.r}, {"field", hi.field}, {"t_max", hi_tmax}}, [&] {
                   return with_field(hi.field, [&]<Field F>() -> json {
                       const auto I = load_ideal<F>(hi);
                       const MonomialIdeal in = initial_ideal(I, MonomialOrder::grevlex);
                       json values = json::array();
                       for (long t = 0; t <= hi_tmax; ++t) values.push_back(to_json(hilbert_function(in, t)));
                       const auto num = hilbert_series_numerator_recursive(in);
                       return json{{"initial_ideal", to_json(in)},
                                   {"hilbert_function", values},
                                   {"numerator", num.to_string()},
                                   {"hilbert_polynomial", to_json(hilbert_polynomial(in))}};
                   });
               }};
    });

    // gotzmann
    std::string go_q;
    IdealSource go;
    auto* s_go = app.add_subcommand("gotzmann", "Gotzmann decomposition and number of a quotient Hilbert polynomial");
    s_go->add_option("--Q", go_q, "Hilbert polynomial of R/I, as an expression in t or a coefficient list [c0, c1, ...]");
    s_go->add_option("--r", go.r, "with --ideal/--gens: take Q from this ideal");
    s_go->add_option("--ideal", go.file, "ideal file");
    s_go->add_option("--gens", go.gens, "generators separated by ';'");
    s_go->callback([&] {
        cmd = {"gotzmann", {{"Q", go_q}, {"r", go.r}}, [&] {
                   HilbertPolynomial Q;
                   if (!go_q.empty())
                       Q = cli::parse_hilbert_polynomial(go_q);
                   else
                       Q = hilbert_polynomial(load_ideal<Rational>(go));
                   const auto dec = gotzmann_decompose(Q);
                   return json{{"Q", to_json(Q)}, {"a", dec.a}, {"gotzmann_number", dec.s()}};
               }};
    });

    // hoa
    int ho_d = 0, ho_b = 0, ho_c = 0, ho_r = 0, ho_codim = 0;
    auto* s_ho = app.add_subcommand("hoa", "closed-form Gotzmann-number majorant; with --r, the (n, m) parameters fed to the torsion bound");
    s_ho->add_option("--d", ho_d, "generator degree bound d >= 2")->required();
    s_ho->add_option("--b", ho_b, "Krull dimension of R/I");
    s_ho->add_option("--c", ho_c, "codimension r + 1 - b");
    s_ho->add_option("--r", ho_r, "ambient dimension, for the (n, m) parameters");
    s_ho->add_option("--codim", ho_codim, "codimension of X (omit for the codimension-free majorant)");
    s_ho->callback([&] {
        cmd = {"hoa", {{"d", ho_d}, {"b", ho_b}, {"c", ho_c}, {"r", ho_r}, {"codim", ho_codim}}, [&] {
                   if (ho_r > 0) {
                       const auto p = torsion_bound_parameters(ho_d, ho_r, ho_codim > 0 ? std::optional<int>(ho_codim) : std::nullopt);
                       return json{{"n", to_json(p.n)}, {"m", to_json(p.m)}, {"mode", p.mode}};
                   }
                   if (ho_b <= 0 || ho_c <= 0) throw InputError("give --b and --c, or --r");
                   return json{{"bound", to_json(hoa_bound(ho_d, ho_b, ho_c))}};
               }};
    });

    // dube
    int du_d = 0, du_r = 0;
    auto* s_du = app.add_subcommand("dube", "degree bound for reduced Groebner basis elements");
    s_du->add_option("--d", du_d, "generator degree bound")->required();
    s_du->add_option("--r", du_r, "projective dimension r")->required();
    s_du->callback([&] {
        cmd = {"dube", {{"d", du_d}, {"r", du_r}}, [&] { return json{{"bound", to_json(dube_bound(du_d, du_r))}}; }};
    });

    // hilb-eqs
    int he_r = 0, he_t = 0;
    std::string he_q, he_x, he_out, he_field = "qq";
    bool he_allow = false, he_points = false;
    std::size_t he_budget = 1'000'000;
    auto* s_he = app.add_subcommand("hilb-eqs", "defining equations of the Hilbert scheme in Pluecker coordinates: quadrics, Fitting minors, containment conditions");
    s_he->add_option("--r", he_r, "projective dimension r")->required();
    s_he->add_option("--t", he_t, "degree t of the Grassmannian embedding")->required();
    s_he->add_option("--Q", he_q, "Hilbert polynomial of the subschemes, expression in t or [c0, c1, ...]")->required();
    s_he->add_option("--X", he_x, "file with the equations of the ambient subscheme X (default: all of P^r)");
    s_he->add_option("--out", he_out, "write the equations here, plus a JSON manifest at <out>.json");
    s_he->add_option("--field", he_field, "coefficient field: qq or gf32003")->capture_default_str();
    s_he->add_option("--minor-budget", he_budget, "emit minors explicitly only up to this many")->capture_default_str();
    s_he->add_flag("--allow-small-t", he_allow, "accept t below max(Gotzmann number, d) with a warning");
    s_he->add_flag("--coordinate-points", he_points, "evaluate the equations at every coordinate monomial subspace");
    s_he->callback([&] {
        cmd = {"hilb-eqs", {{"r", he_r}, {"t", he_t}, {"Q", he_q}, {"X", he_x}, {"field", he_field}, {"minor_budget", he_budget}}, [&] {
                   return with_field(he_field, [&]<Field F>() -> json {
                       std::optional<IdealPresentation<F>> X;
                       if (!he_x.empty()) X = load_ideal<F>(IdealSource{he_x, "", he_r, he_field, "grevlex"});
                       HilbOptions ho;
                       ho.allow_small_t = he_allow;
                       ho.fitting.minor_budget = he_budget;
                       const auto H = hilb_equations<F>(he_r, he_t, cli::parse_hilbert_polynomial(he_q), X, ho);
                       json out{{"n", H.n},
                                {"m", H.m},
                                {"dim_v", H.dim_v},
                                {"dim_w", H.dim_w},
                                {"plucker_variables", H.index.size()},
                                {"gotzmann_number", H.gotzmann_number},
                                {"warnings", H.warnings},
                                {"quadrics", H.plucker_quadrics.size()},
                                {"lambda_rows", H.fitting.lambda.rows},
                                {"lambda_cols", H.fitting.lambda.cols()},
                                {"minor_count", to_json(H.fitting.minor_count())},
                                {"minors_enumerated", H.minors_enumerated},
                                {"fitting_minors", H.fitting_minors.size()},
                                {"linear_conditions", H.linear_conditions.size()},
                                {"P", to_json(H.P)}};
                       if (he_points) {
                           json pts = json::array();
                           for (std::size_t k = 0; k < H.basis_v.size(); ++k) {
                               if (H.n != H.dim_v - 1) break;
                               std::vector<std::vector<F>> rows;
                               for (std::size_t j = 0; j < H.basis_v.size(); ++j) {
                                   if (j == k) continue;
                                   std::vector<F> e(H.basis_v.size());
                                   e[j] = F(1L);
                                   rows.push_back(std::move(e));
                               }
                               const auto c = H.check(plucker_coordinates(H.index, rows));
                               pts.push_back({{"missing_monomial", H.basis_v[k].to_string()},
                                              {"quadrics", c.quadrics},
                                              {"fitting", c.fitting},
                                              {"linear", c.linear},
                                              {"lambda_rank", c.lambda_rank},
                                              {"accepted", c.accepted()}});
                           }
                           out["coordinate_points"] = pts;
                       }
                       if (!he_out.empty()) {
                           std::ofstream f(he_out);
                           if (!f) throw InputError(he_out + ": cannot write");
                           std::size_t line = 0;
                           json sections = json::object();
                           auto section = [&](const std::string& name, const std::vector<Polynomial<F>>& ps) {
                               f << "# " << name << "\n";
                               ++line;
                               sections[name] = {{"first_line", line + 1}, {"count", ps.size()}};
                               for (const auto& p : ps) {
                                   f << export_line(p, H.index) << "\n";
                                   ++line;
                               }
                           };
                           section("quadrics", H.plucker_quadrics);
                           section("fitting", H.fitting_minors);
                           section("linear", H.linear_conditions);
                           json names = json::array();
                           for (std::size_t k = 0; k < H.index.size(); ++k) names.push_back(H.index.name(k));
                           std::ofstream mf(he_out + ".json");
                           mf << json{{"schema_version", kSchemaVersion},
                                      {"r", he_r},
                                      {"t", he_t},
                                      {"n", H.n},
                                      {"dim_v", H.dim_v},
                                      {"field", he_field},
                                      {"variables", names},
                                      {"sections", sections},
                                      {"minors_enumerated", H.minors_enumerated}}
                                     .dump(2)
                              << "\n";
                           out["written"] = he_out;
                       }
                       return out;
                   });
               }};
    });

    // plucker-point
    IdealSource pp;
    int pp_t = 0, pp_n = -1;
    auto* s_pp = app.add_subcommand("plucker-point", "Pluecker coordinates of the degree-t piece of the ideal of a subscheme");
    add_ideal_options(s_pp, pp, false);
    s_pp->add_option("--t", pp_t, "degree t")->required();
    s_pp->add_option("--n", pp_n, "expected dim of the degree-t piece");
    s_pp->callback([&] {
        cmd = {"plucker-point", {{"r", pp.r}, {"t", pp_t}, {"n", pp_n}, {"field", pp.field}}, [&] {
                   return with_field(pp.field, [&]<Field F>() -> json {
                       const auto Z = load_ideal<F>(pp);
                       const auto z = plucker_point_of_subscheme(Z, pp_t, pp_n >= 0 ? std::optional<int>(pp_n) : std::nullopt);
                       const int dimV = static_cast<int>(monomials_of_degree(pp.r, pp_t).size());
                       const int n = static_cast<int>(ideal_piece_basis(Z, pp_t).size());
                       const PluckerIndex P(n, dimV);
                       json coords = json::object();
                       json nonzero = json::array();
                       for (std::size_t k = 0; k < z.size(); ++k) {
                           if (z[k].is_zero()) continue;
                           coords[P.name(k)] = z[k].to_string();
                           nonzero.push_back(P.name(k));
                       }
                       json basis = json::array();
                       for (const auto& m : monomials_of_degree(pp.r, pp_t)) basis.push_back(m.to_string());
                       return json{{"n", n}, {"dim_v", dimV}, {"basis_v", basis}, {"coordinates", coords}, {"support", nonzero}};
                   });
               }};
    });

    // nns-bound / pi1-bound
    int nb_d = 2, nb_r = 3;
    std::string nb_variant = "headline";
    auto* s_nb = app.add_subcommand("nns-bound", "tower bound on the order of the torsion of the Neron-Severi group");
    s_nb->add_option("--d", nb_d, "degree bound of the defining equations, d >= 2")->required();
    s_nb->add_option("--r", nb_r, "ambient dimension, r >= 3")->required();
    s_nb->add_option("--variant", nb_variant, "headline, refined or disconnected")->capture_default_str();
    s_nb->callback([&] {
        cmd = {"nns-bound", {{"d", nb_d}, {"r", nb_r}, {"variant", nb_variant}}, [&] {
                   const auto v = parse_variant(nb_variant);
                   json out = to_json(nns_bound(nb_d, nb_r, v));
                   out["innermost"] = cli::real_json(nns_exponent(nb_r, v));
                   return out;
               }};
    });
    int pi_d = 2, pi_r = 3;
    std::string pi_kind = "etale";
    auto* s_pi = app.add_subcommand("pi1-bound", "tower bound on the torsion of the abelianized etale (or Nori) fundamental group");
    s_pi->add_option("--d", pi_d, "degree bound, d >= 2")->required();
    s_pi->add_option("--r", pi_r, "ambient dimension, r >= 3")->required();
    s_pi->add_option("--kind", pi_kind, "etale or nori")->capture_default_str();
    s_pi->callback([&] {
        cmd = {"pi1-bound", {{"d", pi_d}, {"r", pi_r}, {"kind", pi_kind}}, [&] {
                   if (pi_kind == "etale") return to_json(pi1_bound(pi_d, pi_r));
                   if (pi_kind == "nori") return to_json(nori_bound(pi_d, pi_r));
                   throw InputError("--kind must be etale or nori");
               }};
    });

    // gen-bound
    std::string gn_deg;
    auto* s_gn = app.add_subcommand("gen-bound", "number of generators of the Neron-Severi torsion: (deg - 1)(deg - 2), and the half bound for the p-part");
    s_gn->add_option("--deg", gn_deg, "degree of X, >= 1")->required();
    s_gn->callback([&] {
        cmd = {"gen-bound", {{"deg", gn_deg}}, [&] {
                   BigInt deg;
                   if (deg.set_str(gn_deg, 10) != 0) throw InputError("--deg: not an integer: " + gn_deg);
                   const auto g = generator_bounds(deg);
                   return json{{"full", to_json(g.full)}, {"p_power", to_json(g.p_power)}};
               }};
    });

    // chain-audit
    int ca_d = 2, ca_r = 3;
    std::size_t ca_cap = 100'000;
    auto* s_ca = app.add_subcommand("chain-audit", "check every inequality of the torsion-bound proof chain at (d, r)");
    s_ca->add_option("--d", ca_d, "d >= 2")->required();
    s_ca->add_option("--r", ca_r, "r >= 3")->required();
    s_ca->add_option("--exact-digit-cap", ca_cap, "exact big-integer steps while t has fewer digits")->capture_default_str();
    s_ca->callback([&] {
        cmd = {"chain-audit", {{"d", ca_d}, {"r", ca_r}, {"exact_digit_cap", ca_cap}}, [&] {
                   return to_json(chain_audit(ca_d, ca_r, ChainAuditOptions{ca_cap}));
               }};
    });

    // corpus-audit
    CorpusAuditOptions co;
    bool co_entries = false;
    auto* s_co = app.add_subcommand("corpus-audit", "run the splitting recursion against the exact oracle on a seeded corpus and record every majorant comparison");
    s_co->add_option("--seed", co.seed, "mt19937_64 seed")->capture_default_str();
    s_co->add_option("--count", co.count, "number of random ideals")->capture_default_str();
    s_co->add_option("--r-max", co.r_max, "largest r")->capture_default_str();
    s_co->add_option("--d-max", co.d_max, "largest generator degree")->capture_default_str();
    s_co->add_flag("--entries", co_entries, "list every instance, not only those with findings");
    s_co->callback([&] {
        cmd = {"corpus-audit", {{"seed", co.seed}, {"count", co.count}, {"r_max", co.r_max}, {"d_max", co.d_max}}, [&] {
                   const auto rep = corpus_audit(co);
                   json entries = json::array();
                   for (const auto& e : rep.entries) {
                       if (!co_entries && e.source != "documented" && e.audit.violations.empty() && e.audit.exact_le_leaf_sum)
                           continue;
                       json a = to_json(e.audit);
                       a["source"] = e.source;
                       a["m"] = e.instance.m.to_string();
                       a["ideal"] = to_json(e.instance.I);
                       a["d"] = e.instance.d;
                       a["r"] = e.instance.r();
                       entries.push_back(std::move(a));
                   }
                   return json{{"instances", rep.entries.size()},
                               {"skipped", rep.skipped},
                               {"bound_violations", rep.bound_violations},
                               {"d_pow_r_violations", rep.d_pow_r_violations},
                               {"majorant_violations", rep.majorant_violations},
                               {"entries", entries}};
               }};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        json result = cmd.run();
        json env{{"schema_version", kSchemaVersion},
                 {"command", cmd.name},
                 {"parameters", cmd.parameters},
                 {"result", std::move(result)},
                 {"versions", {{"nstor", kVersion}, {"gmp", gmp_version_string()}}}};
        if (common.timing)
            env["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (common.human)
            print_human(env);
        else
            std::cout << env.dump(2) << "\n";
        return 0;
    } catch (const InputError& e) {
        std::cerr << "nstor " << cmd.name << ": input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "nstor " << cmd.name << ": resource limit: " << e.what() << "\n";
        return 3;
    }
}
