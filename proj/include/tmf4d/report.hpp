#pragma once

/*
 * Table reproduction harness.  reproduce("T1").."T8", "counterexample",
 * "degree-consistency" recompute every golden row through the catalog +
 * degree engine + generator rule (+ the fiber-sum formulas for T3/T4/T5/T7
 * and the pair sweeps), diff against the frozen expected values and return
 * a TableReport.  Output renderers are deterministic: fixed row order, no
 * timestamps, ordered JSON.
 */

#include "tmf4d/anomaly.hpp"
#include "tmf4d/data/golden_tables.hpp"
#include "tmf4d/fibersum.hpp"
#include "tmf4d/manifold_expr.hpp"
#include "tmf4d/tmf_groups.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace tmf4d {

struct ReportRow {
    std::string input;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string note;
};

struct TableReport {
    std::string table_id;
    std::string title;
    std::vector<ReportRow> rows;
    long long passed = 0;
    long long failed = 0;
};

namespace detail {

inline const nlohmann::json& golden() {
    static const nlohmann::json g = nlohmann::json::parse(data::golden_tables_json);
    return g;
}

inline void push_row(TableReport& rep, std::string input, std::string expected,
                     std::string computed, bool pass, std::string note = "") {
    (pass ? rep.passed : rep.failed) += 1;
    rep.rows.push_back(ReportRow{std::move(input), std::move(expected), std::move(computed), pass,
                                 std::move(note)});
}

// degree + printed-generator check against one golden row
inline void check_generator_row(TableReport& rep, Theory theory, const nlohmann::json& row) {
    std::string label = row.at("label").get<std::string>();
    long long d_gold = row.at("degree").get<long long>();
    std::string gen_gold = row.at("generator").get<std::string>();
    std::string expected = "d=" + std::to_string(d_gold) + ", " + gen_gold;
    std::string note = row.value("note", "");
    try {
        ManifoldInvariants X = parse_manifold_expr(row.at("expr").get<std::string>());
        long long d = tmf_degree(theory, X);
        MFMonomial g = free_generator(d);
        std::string computed = "d=" + std::to_string(d) + ", " + mono_str(g);
        bool pass = d == d_gold;
        MFMonomial printed = parse_monomial(gen_gold);
        pass = pass && equal_up_to_j(printed, g);
        if (row.value("match", "exact") == std::string("exact"))
            pass = pass && mono_str(g) == gen_gold;
        if (row.contains("alternates"))
            for (const auto& alt : row.at("alternates"))
                pass = pass && equal_up_to_j(parse_monomial(alt.get<std::string>()), g);
        push_row(rep, label, expected, computed, pass, note);
    } catch (const std::exception& e) {
        push_row(rep, label, expected, std::string("error: ") + e.what(), false, note);
    }
}

inline std::string strip_parens(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')'; }),
            s.end());
    return s;
}

} // namespace detail

inline TableReport reproduce_T1() {
    const auto& t = detail::golden().at("T1");
    TableReport rep{"T1", t.at("title").get<std::string>(), {}, 0, 0};
    for (const auto& row : t.at("rows")) {
        std::string label = row.at("label").get<std::string>();
        long long d_gold = row.at("degree").get<long long>();
        std::string el_gold = row.at("element").get<std::string>();
        std::string expected = "d=" + std::to_string(d_gold) + ", T[X]=" + el_gold;
        try {
            ManifoldInvariants X = parse_manifold_expr(row.at("expr").get<std::string>());
            ToyImage im = toy_image(X);
            std::string computed =
                "d=" + std::to_string(im.degree) + ", T[X]=" + (im.matched_row ? im.element : "?");
            bool pass = im.degree == d_gold && im.matched_row && im.element == el_gold;
            detail::push_row(rep, label, expected, computed, pass);
        } catch (const std::exception& e) {
            detail::push_row(rep, label, expected, std::string("error: ") + e.what(), false);
        }
    }
    return rep;
}

inline TableReport reproduce_T2() {
    const auto& t = detail::golden().at("T2");
    TableReport rep{"T2", t.at("title").get<std::string>(), {}, 0, 0};
    Theory theory = parse_theory(t.at("theory").get<std::string>());
    for (const auto& row : t.at("rows")) detail::check_generator_row(rep, theory, row);
    return rep;
}

namespace detail {

// shared by T3 and T5: direct-construction degree/generator check plus the
// fiber-sum route (invariants + formula output)
inline void check_fibersum_row(TableReport& rep, Theory theory, const nlohmann::json& row,
                               bool vector_mode) {
    std::string label = row.at("label").get<std::string>();
    long long d_gold = row.at("degree").get<long long>();
    std::string gen_gold = row.at("generator").get<std::string>();
    std::string expected = "d=" + std::to_string(d_gold) + ", " + gen_gold;
    std::string note = row.value("note", "");
    try {
        ManifoldInvariants D = parse_manifold_expr(row.at("direct").get<std::string>());
        ManifoldInvariants L = parse_manifold_expr(row.at("left").get<std::string>());
        ManifoldInvariants R = parse_manifold_expr(row.at("right").get<std::string>());
        long long genus = row.at("genus").get<long long>();
        ManifoldInvariants Y = fiber_sum(L, R, genus);
        long long d = tmf_degree(theory, D);
        bool pass = d == d_gold;
        pass = pass && Y.euler == D.euler && Y.signature == D.signature && Y.spin == D.spin;
        MFMonomial lhs = free_generator(d);
        MFMonomial rhs;
        if (vector_mode)
            rhs = vector_fibersum(free_generator(tmf_degree(theory, L)),
                                  free_generator(tmf_degree(theory, R)),
                                  row.at("n").get<long long>(), row.at("r").get<long long>());
        else
            rhs = hyper_fibersum(free_generator(tmf_degree(theory, L)),
                                 free_generator(tmf_degree(theory, R)));
        pass = pass && tmf_degree(theory, Y) == d && degree(rhs) == d && equal_up_to_j(lhs, rhs);
        MFMonomial printed = parse_monomial(gen_gold);
        pass = pass && equal_up_to_j(printed, lhs) && mono_str(lhs) == gen_gold;
        std::string computed = "d=" + std::to_string(d) + ", " + mono_str(lhs) + ", formula " +
                               (equal_up_to_j(lhs, rhs) ? "agrees" : "disagrees");
        push_row(rep, label, expected, computed, pass, note);
    } catch (const std::exception& e) {
        push_row(rep, label, expected, std::string("error: ") + e.what(), false, note);
    }
}

} // namespace detail

inline TableReport reproduce_T3() {
    const auto& t = detail::golden().at("T3");
    TableReport rep{"T3", t.at("title").get<std::string>(), {}, 0, 0};
    Theory theory = parse_theory(t.at("theory").get<std::string>());
    for (const auto& row : t.at("base")) detail::check_generator_row(rep, theory, row);
    for (const auto& row : t.at("rows")) detail::check_fibersum_row(rep, theory, row, false);
    return rep;
}

inline TableReport reproduce_T4() {
    const auto& t = detail::golden().at("T4");
    TableReport rep{"T4", t.at("title").get<std::string>(), {}, 0, 0};
    Theory theory = parse_theory(t.at("theory").get<std::string>());
    for (const auto& row : t.at("rows")) detail::check_generator_row(rep, theory, row);
    return rep;
}

inline TableReport reproduce_T5() {
    const auto& t = detail::golden().at("T5");
    TableReport rep{"T5", t.at("title").get<std::string>(), {}, 0, 0};
    Theory theory = parse_theory(t.at("theory").get<std::string>());
    for (const auto& row : t.at("elliptic")) detail::check_generator_row(rep, theory, row);
    for (const auto& row : t.at("rows")) detail::check_fibersum_row(rep, theory, row, true);
    return rep;
}

inline TableReport reproduce_T6() {
    const auto& t = detail::golden().at("T6");
    TableReport rep{"T6", t.at("title").get<std::string>(), {}, 0, 0};
    Theory theory = parse_theory(t.at("theory").get<std::string>());
    for (const auto& row : t.at("rows")) detail::check_generator_row(rep, theory, row);
    return rep;
}

inline TableReport reproduce_T7() {
    const auto& t = detail::golden().at("T7");
    TableReport rep{"T7", t.at("title").get<std::string>(), {}, 0, 0};
    Theory theory = parse_theory(t.at("theory").get<std::string>());
    for (const auto& row : t.at("base")) detail::check_generator_row(rep, theory, row);
    for (const auto& row : t.at("rows")) {
        std::string label = row.at("label").get<std::string>();
        long long d_gold = row.at("degree").get<long long>();
        std::string gen_gold = row.at("generator").get<std::string>();
        std::string expected = "d=" + std::to_string(d_gold) + ", " + gen_gold;
        try {
            long long n = row.at("n").get<long long>();
            long long r = row.at("r").get<long long>();
            ManifoldInvariants D = parse_manifold_expr(row.at("direct").get<std::string>());
            long long d = tmf_degree(theory, D);
            VerdictReport v = verify_estring_Z(n, r);
            MFMonomial lhs = free_generator(d);
            bool pass = d == d_gold && v.pass && v.lhs_degree == d &&
                        mono_str(lhs) == gen_gold && equal_up_to_j(parse_monomial(gen_gold), lhs);
            std::string computed = "d=" + std::to_string(d) + ", " + mono_str(lhs) + ", formula " +
                                   (v.pass ? "agrees" : "disagrees");
            detail::push_row(rep, label, expected, computed, pass);
        } catch (const std::exception& e) {
            detail::push_row(rep, label, expected, std::string("error: ") + e.what(), false);
        }
    }
    return rep;
}

inline TableReport reproduce_T8() {
    TableReport rep{"T8", "pi_d TMF with torsion and theory generators", {}, 0, 0};
    for (const auto& entry : dataset().entries) {
        if (entry.citation.rfind("T8", 0) != 0) continue;
        std::string label = "d=" + std::to_string(entry.degree);
        std::string expected = entry.group;
        try {
            TmfEntry e = lookup(entry.degree);
            bool pass = e.torsion == entry.group && e.torsion_generators == entry.generators;
            // the mod-8 polynomial summand rule must be consistent with the
            // recorded group
            if (!e.poly_part.empty())
                pass = pass && detail::strip_parens(e.torsion).find(
                                   detail::strip_parens(e.poly_part)) != std::string::npos;
            if (e.torsion == "0") pass = pass && e.poly_part.empty();
            std::string computed = e.torsion;
            computed += " | poly_part=" + (e.poly_part.empty() ? "-" : e.poly_part);
            detail::push_row(rep, label, expected, computed, pass);
        } catch (const std::exception& ex) {
            detail::push_row(rep, label, expected, std::string("error: ") + ex.what(), false);
        }
    }
    return rep;
}

inline TableReport reproduce_counterexample() {
    TableReport rep{"counterexample", "connected-sum formula fails on E(1) = CP2 # 9 CP2bar", {},
                    0, 0};
    CounterexampleReport cx = connected_sum_counterexample();
    detail::push_row(rep, "degree additivity",
                     "d(E(1)) = 3 + 9*(-2) = -15",
                     "d = " + std::to_string(cx.left_degree) + ", factors " +
                         std::to_string(cx.right_factor_degrees[0]) + " and " +
                         std::to_string(cx.right_factor_degrees[1]),
                     cx.degrees_add && cx.left_degree == -15);
    detail::push_row(rep, "T[E(1)]", "eta*E4/Delta, nonzero in Z/2[x]",
                     cx.left_element + " in " + cx.left_group,
                     cx.left_nonzero && cx.left_element == "eta*E4/Delta" &&
                         cx.left_group == "Z/2[x]");
    detail::push_row(rep, "T[CP2] * T[CP2bar]^9", "0 (T[CP2bar] = 0)", cx.right_element,
                     cx.right_element == "0");
    detail::push_row(rep, "T[X1 # X2] = T[X1]*T[X2]?", "inequality", cx.equal ? "equal" : "unequal",
                     !cx.equal);
    return rep;
}

inline TableReport degree_consistency_sweep() {
    TableReport rep{"degree-consistency", "anomaly engine vs closed forms vs family formulas", {},
                    0, 0};
    struct Fam {
        std::string input, expected;
        Theory theory;
    };
    // E(2r), all three theories
    {
        auto run = [&](Theory th, const std::string& fam, auto family) {
            long long total = 0, bad = 0;
            for (long long r = 1; r <= 30; ++r) {
                ManifoldInvariants X = make_elliptic_surface(2 * r);
                long long d = tmf_degree(th, X);
                ++total;
                if (d != closed_form_degree(th, X) || d != family(r)) ++bad;
            }
            detail::push_row(rep, std::string("E(2r), r=1..30, ") + theory_name(th), fam,
                             std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                             bad == 0);
        };
        run(Theory::hypermultiplet, "4r", [](long long r) { return 4 * r; });
        run(Theory::vector_multiplet, "-4r", [](long long r) { return -4 * r; });
        run(Theory::estring_rank1, "116r", [](long long r) { return 116 * r; });
    }
    // toy on E(n)
    {
        long long total = 0, bad = 0;
        for (long long n = 1; n <= 30; ++n) {
            ManifoldInvariants X = make_elliptic_surface(n);
            ++total;
            if (toy_degree(X) != -14 * n - 1) ++bad;
        }
        detail::push_row(rep, "E(n), n=1..30, toy", "-14n-1",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
    }
    // Z(r;2,n) and V(r;n) grids
    {
        auto zfam_hyper = [](long long n, long long r) {
            return (-2 * n * n * n + 2 * n) / 3 + 4 * r;
        };
        auto zfam_estring = [](long long n, long long r) {
            return -4 * (97 * n * n * n + 2 * n - 87 * r) / 3;
        };
        long long total = 0, bad = 0;
        for (long long n = 3; n <= 15; n += 2)
            for (long long r = 1; r <= 30; ++r) {
                ManifoldInvariants Z = make_Z(2, n, r);
                ++total;
                if (tmf_degree(Theory::hypermultiplet, Z) != zfam_hyper(n, r) ||
                    tmf_degree(Theory::hypermultiplet, Z) !=
                        closed_form_degree(Theory::hypermultiplet, Z) ||
                    tmf_degree(Theory::estring_rank1, Z) != zfam_estring(n, r) ||
                    tmf_degree(Theory::estring_rank1, Z) !=
                        closed_form_degree(Theory::estring_rank1, Z) ||
                    tmf_degree(Theory::vector_multiplet, Z) !=
                        closed_form_degree(Theory::vector_multiplet, Z))
                    ++bad;
            }
        detail::push_row(rep, "Z(r;2,n), n=3..15 odd, r=1..30, hyper/vector/estring",
                         "-2n^3/3+2n/3+4r and -(4/3)(97n^3+2n-87r)",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
        total = bad = 0;
        for (long long n = 3; n <= 15; n += 2)
            for (long long r = 1; r <= 30; ++r) {
                ManifoldInvariants V = make_V(n, r);
                ++total;
                if (tmf_degree(Theory::hypermultiplet, V) != zfam_hyper(n, r) ||
                    tmf_degree(Theory::hypermultiplet, V) !=
                        closed_form_degree(Theory::hypermultiplet, V) ||
                    tmf_degree(Theory::vector_multiplet, V) !=
                        closed_form_degree(Theory::vector_multiplet, V) ||
                    tmf_degree(Theory::estring_rank1, V) !=
                        closed_form_degree(Theory::estring_rank1, V))
                    ++bad;
            }
        detail::push_row(rep, "V(r;n), n=3..15 odd, r=1..30, hyper/vector/estring",
                         "hyper matches -2n^3/3+2n/3+4r; engine matches closed forms",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
    }
    // Z(k,m)
    {
        long long total = 0, bad = 0;
        for (long long k = 1; k <= 11; k += 2)
            for (long long m = 1; m <= 11; m += 2) {
                ManifoldInvariants Z = make_Zkm(k, m);
                ++total;
                if (tmf_degree(Theory::hypermultiplet, Z) != 2 * (k + m) + 4 ||
                    tmf_degree(Theory::hypermultiplet, Z) !=
                        closed_form_degree(Theory::hypermultiplet, Z) ||
                    tmf_degree(Theory::vector_multiplet, Z) != -2 * (k + m + 4) ||
                    tmf_degree(Theory::vector_multiplet, Z) !=
                        closed_form_degree(Theory::vector_multiplet, Z) ||
                    tmf_degree(Theory::estring_rank1, Z) !=
                        closed_form_degree(Theory::estring_rank1, Z))
                    ++bad;
            }
        detail::push_row(rep, "Z(k,m), k,m=1..11 odd, hyper/vector/estring",
                         "2(k+m)+4 and -2(k+m+4); engine matches closed forms",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
    }
    // synthetic hyper sweep: the formula against the generator rule on a
    // degree grid
    {
        long long total = 0, bad = 0;
        for (long long d1 = -200; d1 <= 200; d1 += 4)
            for (long long d2 = -200; d2 <= 200; d2 += 4) {
                if (mod_floor(d1 + d2, 24) == 0) continue;
                ++total;
                if (!verify_hyper_degrees(d1, d2).pass) ++bad;
            }
        detail::push_row(rep, "hyper formula grid, d1,d2 in 4Z, |d| <= 200, d1+d2 off 24Z",
                         "formula output = free generator at d1+d2",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
    }
    // hyper formula on pairwise torus fiber sums of the Z(k,m) family and
    // the elliptic surfaces
    {
        std::vector<ManifoldInvariants> pool;
        for (long long k = 1; k <= 11; k += 2)
            for (long long m = k; m <= 11; m += 2) pool.push_back(make_Zkm(k, m));
        for (long long r = 1; r <= 6; ++r) pool.push_back(make_elliptic_surface(2 * r));
        long long total = 0, bad = 0;
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = i; j < pool.size(); ++j) {
                long long d = tmf_degree(Theory::hypermultiplet, pool[i]) +
                              tmf_degree(Theory::hypermultiplet, pool[j]);
                if (mod_floor(d, 24) == 0) continue;
                ++total;
                if (!verify_hyper_fibersum(pool[i], pool[j], 1).pass) ++bad;
            }
        detail::push_row(rep, "hyper formula on Z(k,m) and E(2r) torus pair sums",
                         "formula output = free generator of the glued manifold's degree",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
    }
    // E-string elliptic formula on E(2r) #_f E(2s)
    {
        long long total = 0, bad = 0;
        for (long long r = 1; r <= 11; ++r)
            for (long long s = r; r + s <= 12; ++s) {
                if (mod_floor(r + s, 6) == 0) continue; // 116(r+s) in 24Z
                ++total;
                if (!verify_estring_elliptic(r, s).pass) ++bad;
            }
        detail::push_row(rep, "estring formula on E(2r) #_f E(2s), r+s <= 12 off 6Z",
                         "formula output = free generator at 116(r+s)",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
    }
    // E-string Z-family formula across the s(n) grid (n = 15 is excluded: the
    // printed s value does not close the weight bookkeeping)
    {
        long long total = 0, bad = 0;
        for (long long n = 3; n <= 13; n += 2)
            for (long long r = 1; r <= 30; ++r) {
                EstringZParts parts = estring_Z_parts(n, r);
                if (mod_floor(parts.d1 + parts.d2 - 44 * n * (n + 1), 24) == 0) continue;
                ++total;
                if (!verify_estring_Z(n, r).pass) ++bad;
            }
        detail::push_row(rep, "estring Z-family formula, n=3..13 odd, r=1..30",
                         "formula output = free generator of the glued manifold's degree",
                         std::to_string(total - bad) + "/" + std::to_string(total) + " agree",
                         bad == 0);
    }
    return rep;
}

inline TableReport reproduce(const std::string& table_id) {
    if (table_id == "T1" || table_id == "1") return reproduce_T1();
    if (table_id == "T2" || table_id == "2") return reproduce_T2();
    if (table_id == "T3" || table_id == "3") return reproduce_T3();
    if (table_id == "T4" || table_id == "4") return reproduce_T4();
    if (table_id == "T5" || table_id == "5") return reproduce_T5();
    if (table_id == "T6" || table_id == "6") return reproduce_T6();
    if (table_id == "T7" || table_id == "7") return reproduce_T7();
    if (table_id == "T8" || table_id == "8") return reproduce_T8();
    if (table_id == "counterexample") return reproduce_counterexample();
    if (table_id == "degree-consistency") return degree_consistency_sweep();
    throw ParseError("unknown table id '" + table_id +
                     "' (expected 1..8, counterexample, degree-consistency)");
}

inline std::vector<TableReport> reproduce_all() {
    std::vector<TableReport> reports;
    for (int i = 1; i <= 8; ++i) reports.push_back(reproduce("T" + std::to_string(i)));
    reports.push_back(reproduce_counterexample());
    reports.push_back(degree_consistency_sweep());
    return reports;
}

// ---- renderers ----

inline std::string render_text(const std::vector<TableReport>& reports) {
    std::string out;
    long long passed = 0, failed = 0;
    for (const auto& rep : reports) {
        out += "== " + rep.table_id + ": " + rep.title + " ==\n";
        for (const auto& row : rep.rows) {
            out += std::string(row.pass ? "[PASS] " : "[FAIL] ") + row.input +
                   " | expected: " + row.expected + " | computed: " + row.computed;
            if (!row.note.empty()) out += " | note: " + row.note;
            out += "\n";
        }
        out += rep.table_id + ": " + std::to_string(rep.passed) + " passed, " +
               std::to_string(rep.failed) + " failed\n\n";
        passed += rep.passed;
        failed += rep.failed;
    }
    out += "total: " + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
    return out;
}

inline nlohmann::ordered_json report_json(const std::vector<TableReport>& reports) {
    nlohmann::ordered_json tables = nlohmann::ordered_json::array();
    long long passed = 0, failed = 0;
    for (const auto& rep : reports) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : rep.rows) {
            nlohmann::ordered_json r;
            r["input"] = row.input;
            r["expected"] = row.expected;
            r["computed"] = row.computed;
            r["pass"] = row.pass;
            if (!row.note.empty()) r["note"] = row.note;
            rows.push_back(std::move(r));
        }
        nlohmann::ordered_json t;
        t["table_id"] = rep.table_id;
        t["title"] = rep.title;
        t["passed"] = rep.passed;
        t["failed"] = rep.failed;
        t["rows"] = std::move(rows);
        tables.push_back(std::move(t));
        passed += rep.passed;
        failed += rep.failed;
    }
    nlohmann::ordered_json o;
    o["tables"] = std::move(tables);
    o["summary"] = nlohmann::ordered_json{{"passed", passed}, {"failed", failed}};
    return o;
}

inline std::string render_json(const std::vector<TableReport>& reports) {
    return report_json(reports).dump(2) + "\n";
}

inline std::string render_csv(const std::vector<TableReport>& reports) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        q += "\"";
        return q;
    };
    std::string out = "table,input,expected,computed,verdict,note\n";
    for (const auto& rep : reports)
        for (const auto& row : rep.rows)
            out += rep.table_id + "," + quote(row.input) + "," + quote(row.expected) + "," +
                   quote(row.computed) + "," + (row.pass ? "pass" : "fail") + "," +
                   quote(row.note) + "\n";
    return out;
}

inline long long total_failures(const std::vector<TableReport>& reports) {
    long long failed = 0;
    for (const auto& rep : reports) failed += rep.failed;
    return failed;
}

} // namespace tmf4d
