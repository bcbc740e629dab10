// tmf4d command line front end.  Exit codes: 0 ok, 2 parse error, 3 domain
// error, 4 verification failure.

#include <CLI11.hpp>

#include "tmf4d/char_numbers.hpp"
#include "tmf4d/qseries.hpp"
#include "tmf4d/report.hpp"
#include "tmf4d/wzw.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

using nlohmann::ordered_json;
using namespace tmf4d;

namespace {

Rat parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(num) / den; // divide: den may be negative
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational '" + s + "' (expected p or p/q)");
    }
}

std::optional<long long> match_elliptic(const std::string& name) {
    static const std::regex re(R"(E\((\d+)\)(_K)?)");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return std::nullopt;
    return std::stoll(m[1]);
}

std::optional<long long> match_X2n(const std::string& name) {
    static const std::regex re(R"(X\(2,(\d+)\))");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return std::nullopt;
    return std::stoll(m[1]);
}

ordered_json eligibility_json(const EligibilityReport& rep) {
    ordered_json o;
    o["spin"] = rep.spin;
    o["simply_connected"] = rep.simply_connected;
    ordered_json ts = ordered_json::array();
    for (const auto& t : rep.theories) {
        ordered_json e;
        e["theory"] = t.theory;
        e["degree_defined"] = t.degree_defined;
        if (t.degree_defined) {
            e["degree"] = t.degree;
            e["degree_in_4Z"] = t.degree_in_4Z;
        }
        ts.push_back(std::move(e));
    }
    o["theories"] = std::move(ts);
    return o;
}

void print_manifold_text(const ManifoldInvariants& X) {
    auto opt = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    std::cout << "name: " << X.name << "\n";
    std::cout << "chi: " << X.euler << "  sigma: " << X.signature << "\n";
    std::cout << "b1: " << opt(X.b1) << "  b2_plus: " << opt(X.b2_plus)
              << "  b2_minus: " << opt(X.b2_minus) << "\n";
    std::cout << "spin: " << (X.spin ? "yes" : "no")
              << "  simply_connected: " << (X.simply_connected ? "yes" : "no") << "\n";
    if (chi_h_defined(X)) std::cout << "chi_h: " << holomorphic_euler(X) << "\n";
    std::cout << "fiber_genus: " << opt(X.fiber_genus) << "  base_genus: " << opt(X.base_genus)
              << "  gluing_genus: " << opt(X.gluing_genus) << "\n";
    if (!X.provenance.empty()) std::cout << "provenance: " << X.provenance << "\n";
    for (const auto& w : X.warnings) std::cout << "warning: " << w << "\n";
    EligibilityReport rep = check_compactification_eligibility(X);
    for (const auto& t : rep.theories) {
        std::cout << "degree[" << t.theory << "]: ";
        if (t.degree_defined)
            std::cout << t.degree << (t.degree_in_4Z ? " (in 4Z)" : " (not in 4Z)") << "\n";
        else
            std::cout << "undefined\n";
    }
}

ordered_json entry_json(const TmfEntry& e) {
    ordered_json o;
    o["degree"] = e.degree;
    o["poly_part"] = e.poly_part;
    o["free_generator"] = e.free_gen ? ordered_json(mono_str(*e.free_gen)) : ordered_json(nullptr);
    o["torsion"] = e.torsion;
    o["torsion_generators"] = e.torsion_generators;
    o["source"] = e.source;
    o["citation"] = e.citation;
    o["connective_zero"] = e.connective_zero;
    return o;
}

void print_entry_text(const TmfEntry& e) {
    std::cout << "degree: " << e.degree << "\n";
    std::cout << "poly_part: " << (e.poly_part.empty() ? "-" : e.poly_part) << "\n";
    if (e.free_gen) std::cout << "free generator: " << mono_str(*e.free_gen) << "\n";
    std::cout << "torsion: " << e.torsion << "\n";
    if (!e.torsion_generators.empty()) {
        std::cout << "torsion generators:";
        for (const auto& g : e.torsion_generators) std::cout << " " << g;
        std::cout << "\n";
    }
    std::cout << "source: " << e.source << "\n";
    if (!e.citation.empty()) std::cout << "citation: " << e.citation << "\n";
    if (e.connective_zero) std::cout << "note: pi_d tmf = 0 for d < 0 (connective)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact TMF degrees and polynomial-ring generators for 6d (1,0) compactifications "
                 "on 4-manifolds"};
    app.set_version_flag("--version", "tmf4d 1.0.0");
    app.require_subcommand(1);

    auto* cmd_manifold = app.add_subcommand("manifold", "print invariants of a manifold expression");
    std::string m_expr;
    bool m_json = false;
    cmd_manifold->add_option("expr", m_expr, "manifold expression, e.g. E(4), Z(2;2,3), rev(K3)")
        ->required();
    cmd_manifold->add_flag("--json", m_json, "JSON output");

    auto* cmd_degree = app.add_subcommand("degree", "TMF homotopical degree of a compactification");
    std::string d_theory, d_expr;
    bool d_json = false, d_verbatim = false;
    cmd_degree->add_option("--theory", d_theory, "toy|hyper|vector|tensor|estring")->required();
    cmd_degree->add_option("expr", d_expr, "manifold expression")->required();
    cmd_degree->add_flag("--json", d_json, "JSON output");
    cmd_degree->add_flag("--verbatim-estring-delta", d_verbatim,
                         "use the uncorrected E-string p2 coefficient");

    auto* cmd_tmf = app.add_subcommand("tmf", "pi_d TMF entry: generator rule plus dataset");
    long long t_degree = 0;
    std::string t_theory, t_manifold;
    bool t_json = false;
    auto* t_deg_opt = cmd_tmf->add_option("--degree", t_degree, "homotopical degree d");
    cmd_tmf->add_option("--theory", t_theory, "theory for --manifold");
    cmd_tmf->add_option("--manifold", t_manifold, "manifold expression (with --theory)");
    cmd_tmf->add_flag("--json", t_json, "JSON output");

    auto* cmd_fibersum =
        app.add_subcommand("fibersum", "fiber sum two manifolds and run the generator formula");
    std::string f_theory, f_left, f_right;
    long long f_genus = 0;
    bool f_verify = false, f_json = false;
    cmd_fibersum->add_option("--theory", f_theory, "hyper|vector|estring")->required();
    cmd_fibersum->add_option("--left", f_left, "left factor expression")->required();
    cmd_fibersum->add_option("--right", f_right, "right factor expression")->required();
    auto* f_genus_opt = cmd_fibersum->add_option("--genus", f_genus, "gluing surface genus");
    cmd_fibersum->add_flag("--verify", f_verify, "exit 4 unless formula matches the generator rule");
    cmd_fibersum->add_flag("--json", f_json, "JSON output");

    auto* cmd_qexp = app.add_subcommand("qexp", "q-expansion of a modular-form expression");
    std::string q_expr;
    long long q_order = 10;
    bool q_json = false;
    cmd_qexp->add_option("expr", q_expr, "e.g. \"E4^3/Delta\"")->required();
    cmd_qexp->add_option("--order", q_order, "truncation order (default 10)");
    cmd_qexp->add_flag("--json", q_json, "JSON output");

    auto* cmd_wzw = app.add_subcommand("wzw", "search WZW models by central charge");
    std::string w_target;
    long long w_max_rank = 24, w_level_min = -100, w_level_max = 100;
    bool w_json = false;
    cmd_wzw->add_option("--central-charge", w_target, "target charge, e.g. 23/2")->required();
    cmd_wzw->add_option("--max-rank", w_max_rank, "max classical rank (default 24)");
    cmd_wzw->add_option("--level-min", w_level_min, "lowest level (default -100)");
    cmd_wzw->add_option("--level-max", w_level_max, "highest level (default 100)");
    cmd_wzw->add_flag("--json", w_json, "JSON output");

    auto* cmd_charnum = app.add_subcommand("charnum", "degree-8 characteristic numbers");
    long long c_p1 = 0, c_p2 = 0;
    bool c_alt = false, c_json = false;
    cmd_charnum->add_option("--p1", c_p1, "first Pontryagin number")->required();
    cmd_charnum->add_option("--p2", c_p2, "second Pontryagin number")->required();
    cmd_charnum->add_flag("--alternate-p1", c_alt, "use the p1^2 (not 7p1^2) A-hat coefficient");
    cmd_charnum->add_flag("--json", c_json, "JSON output");

    auto* cmd_verify = app.add_subcommand("verify", "reproduce golden tables and formula sweeps");
    std::string v_table, v_format = "text", v_out;
    bool v_all = false;
    cmd_verify->add_option("--table", v_table,
                           "1..8, counterexample, degree-consistency (default: all)");
    cmd_verify->add_flag("--all", v_all, "run every table and sweep");
    cmd_verify->add_option("--format", v_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_verify->add_option("--out", v_out, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_manifold) {
            ManifoldInvariants X = parse_manifold_expr(m_expr);
            validate_record(X);
            if (m_json) {
                ordered_json o = to_json(X);
                o["eligibility"] = eligibility_json(check_compactification_eligibility(X));
                std::cout << o.dump(2) << "\n";
            } else {
                print_manifold_text(X);
            }
        } else if (*cmd_degree) {
            Theory th = parse_theory(d_theory);
            ManifoldInvariants X = parse_manifold_expr(d_expr);
            long long d = tmf_degree(th, X, d_verbatim);
            std::optional<std::string> gen;
            if (mod_floor(d, 4) == 0) gen = mono_str(free_generator(d));
            if (d_json) {
                ordered_json o;
                o["manifold"] = X.name;
                o["theory"] = theory_name(th);
                o["degree"] = d;
                if (th != Theory::toy) {
                    Rat cc = gravitational_anomaly(theory_spec(th, d_verbatim), X);
                    o["cR_minus_cL"] = rat_str(cc);
                }
                o["generator"] = gen ? ordered_json(*gen) : ordered_json(nullptr);
                std::cout << o.dump(2) << "\n";
            } else {
                std::cout << "manifold: " << X.name << "\n";
                std::cout << "theory: " << theory_name(th) << "\n";
                std::cout << "degree: " << d << "\n";
                if (gen) std::cout << "generator: " << *gen << "\n";
            }
        } else if (*cmd_tmf) {
            long long d;
            if (t_deg_opt->count() > 0) {
                d = t_degree;
            } else if (!t_theory.empty() && !t_manifold.empty()) {
                d = tmf_degree(parse_theory(t_theory), parse_manifold_expr(t_manifold));
            } else {
                throw ParseError("tmf needs --degree d or --theory T --manifold M");
            }
            TmfEntry e = lookup(d);
            if (t_json)
                std::cout << entry_json(e).dump(2) << "\n";
            else
                print_entry_text(e);
        } else if (*cmd_fibersum) {
            Theory th = parse_theory(f_theory);
            ManifoldInvariants L = parse_manifold_expr(f_left);
            ManifoldInvariants R = parse_manifold_expr(f_right);
            long long genus;
            if (f_genus_opt->count() > 0) genus = f_genus;
            else if (L.gluing_genus) genus = *L.gluing_genus;
            else if (R.gluing_genus) genus = *R.gluing_genus;
            else throw DomainError("neither factor declares a gluing genus; pass --genus");
            ManifoldInvariants Y = fiber_sum(L, R, genus);
            long long d = tmf_degree(th, Y);
            MFMonomial rhs;
            if (th == Theory::hypermultiplet) {
                rhs = hyper_fibersum(free_generator(tmf_degree(th, L)),
                                     free_generator(tmf_degree(th, R)));
            } else if (th == Theory::vector_multiplet) {
                auto n = match_X2n(L.name);
                auto e = match_elliptic(R.name);
                if (!n || !e || mod_floor(*e, 2) != 0)
                    throw DomainError("the vector formula needs left X(2,n) and right E(2r)[_K]");
                rhs = vector_fibersum(free_generator(tmf_degree(th, L)),
                                      free_generator(tmf_degree(th, R)), *n, *e / 2);
            } else if (th == Theory::estring_rank1) {
                auto a = match_elliptic(L.name);
                auto b = match_elliptic(R.name);
                auto n = match_X2n(L.name);
                if (a && b && mod_floor(*a, 2) == 0 && mod_floor(*b, 2) == 0)
                    rhs = estring_fibersum_elliptic(*a / 2, *b / 2);
                else if (n && b && mod_floor(*b, 2) == 0)
                    rhs = estring_fibersum_Z(*n, *b / 2);
                else
                    throw DomainError(
                        "the E-string formulas cover E(2r) #_f E(2s) and X(2,n) #_f E(2r)_K");
            } else {
                throw DomainError(std::string("no fiber-sum formula for theory ") +
                                  theory_name(th));
            }
            MFMonomial lhs = free_generator(d);
            bool agrees = degree(rhs) == d && equal_up_to_j(lhs, rhs);
            if (f_json) {
                ordered_json o;
                o["result"] = to_json(Y);
                o["theory"] = theory_name(th);
                o["degree"] = d;
                o["expected_generator"] = mono_str(lhs);
                o["formula_generator"] = mono_str(rhs);
                o["formula_agrees"] = agrees;
                std::cout << o.dump(2) << "\n";
            } else {
                std::cout << "glued: " << Y.name << "  chi: " << Y.euler
                          << "  sigma: " << Y.signature << "\n";
                std::cout << "degree: " << d << "\n";
                std::cout << "expected generator: " << mono_str(lhs) << "\n";
                std::cout << "formula generator:  " << mono_str(rhs) << "\n";
                std::cout << "formula " << (agrees ? "agrees" : "DISAGREES") << "\n";
            }
            if (f_verify && !agrees) return 4;
        } else if (*cmd_qexp) {
            if (q_order < 1) throw DomainError("--order must be at least 1");
            QSeries s = parse_q_expression(q_expr, q_order);
            // Laurent division can determine fewer coefficients than requested
            long long upto = std::min(q_order, s.truncation_order());
            if (q_json) {
                ordered_json pairs = ordered_json::array();
                for (long long e = s.min_exponent(); e < upto; ++e)
                    pairs.push_back(ordered_json::array({e, s.coeff(e).str()}));
                ordered_json o;
                o["expr"] = q_expr;
                o["order"] = upto;
                o["coefficients"] = std::move(pairs);
                std::cout << o.dump(2) << "\n";
            } else {
                for (long long e = s.min_exponent(); e < upto; ++e)
                    std::cout << "q^" << e << ": " << s.coeff(e).str() << "\n";
                if (s.min_exponent() >= upto) std::cout << "0 (to this order)\n";
            }
        } else if (*cmd_wzw) {
            Rat target = parse_rational(w_target);
            auto hits = search_by_central_charge(target, w_max_rank, w_level_min, w_level_max);
            if (w_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& h : hits) {
                    ordered_json o;
                    o["algebra"] = algebra_name(h.algebra);
                    o["series"] = series_name(h.algebra.series);
                    o["rank"] = h.algebra.rank;
                    o["level"] = h.level;
                    o["central_charge"] = rat_str(h.charge);
                    arr.push_back(std::move(o));
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& h : hits)
                    std::cout << algebra_name(h.algebra) << " k=" << h.level
                              << " c=" << rat_str(h.charge) << "\n";
                std::cout << hits.size() << " hit" << (hits.size() == 1 ? "" : "s") << "\n";
            }
        } else if (*cmd_charnum) {
            CharData8 data{c_p1, c_p2};
            Rat sigma = signature_from_L2(data);
            Rat ahat = a_hat_2(data, c_alt);
            bool consistent = char_data_consistent(data);
            if (c_json) {
                ordered_json o;
                o["p1"] = c_p1;
                o["p2"] = c_p2;
                o["signature"] = rat_str(sigma);
                o["a_hat_2"] = rat_str(ahat);
                o["signature_integral"] = consistent;
                std::cout << o.dump(2) << "\n";
            } else {
                std::cout << "signature: " << rat_str(sigma) << "\n";
                std::cout << "A-hat_2: " << rat_str(ahat) << "\n";
                std::cout << "signature integral: " << (consistent ? "yes" : "no") << "\n";
            }
        } else if (*cmd_verify) {
            std::vector<TableReport> reports;
            if (!v_all && !v_table.empty())
                reports.push_back(reproduce(v_table));
            else
                reports = reproduce_all();
            std::string rendered = v_format == "json"  ? render_json(reports)
                                   : v_format == "csv" ? render_csv(reports)
                                                       : render_text(reports);
            if (!v_out.empty()) {
                std::ofstream out(v_out, std::ios::binary);
                if (!out) throw DomainError("cannot open --out path " + v_out);
                out << rendered;
            } else {
                std::cout << rendered;
            }
            if (total_failures(reports) > 0) return 4;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
