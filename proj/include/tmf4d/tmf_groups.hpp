#pragma once

/*
 * pi_d TMF bookkeeping.  The free polynomial-ring generator comes from the
 * divisibility rule (unique (p, eps, m) with 4p + 6eps + 12m = d/2); torsion
 * comes from the embedded dataset and is merged in through lookup() after
 * 576-periodicity reduction.  The tiny eta/nu algebra implements the printed
 * relations as rewrite rules and refuses to guess beyond them.
 */

#include "tmf4d/anomaly.hpp"
#include "tmf4d/common.hpp"
#include "tmf4d/data/tmf_dataset.hpp"
#include "tmf4d/manifold.hpp"
#include "tmf4d/mf_monomial.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace tmf4d {

inline MFMonomial free_generator(long long d) {
    if (mod_floor(d, 4) != 0)
        throw DomainError("pi_" + std::to_string(d) +
                          " has no free polynomial part (degree not in 4Z)");
    long long w = d / 2;
    long long rem = mod_floor(w, 12);
    long long p, eps;
    switch (rem) {
        case 0: p = 0; eps = 0; break;
        case 4: p = 1; eps = 0; break;
        case 8: p = 2; eps = 0; break;
        case 6: p = 0; eps = 1; break;
        case 10: p = 1; eps = 1; break;
        case 2: p = 2; eps = 1; break;
        default: throw DomainError("impossible weight residue"); // w is even, so rem is even
    }
    long long m = (w - 4 * p - 6 * eps) / 12;
    return MFMonomial{canonical_coefficient(p, eps, m), 0, p, eps, m};
}

// ---- torsion dataset ----

struct DatasetEntry {
    long long degree;
    std::string group;
    std::vector<std::string> generators;
    std::string citation;
};

struct ToyImageRow {
    std::string name;
    long long b2_plus, b2_minus, degree;
    std::string element;
    std::string citation;
};

struct TmfDataset {
    std::string version;
    long long periodicity = 576;
    std::vector<DatasetEntry> entries;
    std::vector<ToyImageRow> toy_images;
};

inline TmfDataset parse_dataset(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TmfDataset ds;
    ds.version = j.at("version").get<std::string>();
    ds.periodicity = j.at("periodicity").get<long long>();
    for (const auto& e : j.at("entries")) {
        DatasetEntry de;
        de.degree = e.at("degree").get<long long>();
        de.group = e.at("group").get<std::string>();
        for (const auto& g : e.at("generators")) de.generators.push_back(g.get<std::string>());
        de.citation = e.at("citation").get<std::string>();
        ds.entries.push_back(std::move(de));
    }
    for (const auto& t : j.at("toy_images")) {
        ds.toy_images.push_back(ToyImageRow{t.at("name").get<std::string>(),
                                            t.at("b2_plus").get<long long>(),
                                            t.at("b2_minus").get<long long>(),
                                            t.at("degree").get<long long>(),
                                            t.at("element").get<std::string>(),
                                            t.at("citation").get<std::string>()});
    }
    return ds;
}

inline const TmfDataset& dataset() {
    static const TmfDataset ds = [] {
        if (const char* path = std::getenv("TMF4D_DATASET_PATH")) {
            std::ifstream in(path);
            if (!in) throw DomainError(std::string("cannot open dataset override ") + path);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            return parse_dataset(text);
        }
        return parse_dataset(data::tmf_dataset_json);
    }();
    return ds;
}

// ---- entries ----

struct TmfEntry {
    long long degree = 0;
    std::optional<MFMonomial> free_gen;
    std::string torsion = "unknown"; // group descriptor, "0", or "unknown"
    std::vector<std::string> torsion_generators;
    std::string source;       // "rule", "paper_table", or "rule+paper_table"
    std::string poly_part;    // polynomial summand guaranteed by d mod 8, "" if none
    std::string citation;
    bool connective_zero = false; // pi_d tmf = 0 (connective part) although pi_d TMF may not be
};

inline TmfEntry lookup(long long d) {
    TmfEntry e;
    e.degree = d;
    e.connective_zero = d < 0;
    long long m8 = mod_floor(d, 8);
    if (m8 == 0 || m8 == 4) e.poly_part = "Z[x]";
    else if (m8 == 1 || m8 == 2) e.poly_part = "(Z/2)[x]";
    bool rule = false, table = false;
    if (mod_floor(d, 4) == 0) {
        e.free_gen = free_generator(d);
        rule = true;
    }
    const TmfDataset& ds = dataset();
    for (const auto& de : ds.entries) {
        if (mod_floor(d - de.degree, ds.periodicity) == 0) {
            e.torsion = de.group;
            e.torsion_generators = de.generators;
            e.citation = de.citation;
            table = true;
            break;
        }
    }
    e.source = rule && table ? "rule+paper_table" : rule ? "rule" : table ? "paper_table" : "none";
    return e;
}

// ---- eta/nu algebra ----

struct TorsionElement {
    bool known = true;
    long long scalar = 0; // 0 encodes the zero element
    int eta_power = 0;
    int nu_power = 0;
    long long delta_power = 0;

    static TorsionElement zero() { return TorsionElement{true, 0, 0, 0, 0}; }
    static TorsionElement unknown() { return TorsionElement{false, 0, 0, 0, 0}; }
    bool is_zero() const { return known && scalar == 0; }

    bool operator==(const TorsionElement& o) const {
        if (!known || !o.known) return !known && !o.known;
        if (scalar == 0 && o.scalar == 0) return true;
        return scalar == o.scalar && eta_power == o.eta_power && nu_power == o.nu_power &&
               delta_power == o.delta_power;
    }
};

inline TorsionElement torsion_normalize(TorsionElement t) {
    if (!t.known) return TorsionElement::unknown();
    if (t.scalar == 0) return TorsionElement::zero();
    if (t.eta_power >= 4 || t.nu_power >= 4) return TorsionElement::zero(); // eta^4 = nu^4 = 0
    if (t.eta_power == 3) { // eta^3 = 12 nu
        t.eta_power = 0;
        t.nu_power += 1;
        t.scalar *= 12;
    }
    if (t.eta_power > 0 && t.nu_power > 0) return TorsionElement::unknown(); // no printed relation
    if (t.eta_power > 0) t.scalar = mod_floor(t.scalar, 2);            // 2 eta = 0
    if (t.nu_power == 1) t.scalar = mod_floor(t.scalar, 24);           // 24 nu = 0
    if (t.nu_power >= 2) t.scalar = mod_floor(t.scalar, 2);            // 2 nu^2 = 0
    if (t.scalar == 0) return TorsionElement::zero();
    return t;
}

inline TorsionElement torsion_mul(const TorsionElement& a, const TorsionElement& b) {
    if (!a.known || !b.known) return TorsionElement::unknown();
    TorsionElement t;
    t.scalar = a.scalar * b.scalar;
    t.eta_power = a.eta_power + b.eta_power;
    t.nu_power = a.nu_power + b.nu_power;
    t.delta_power = a.delta_power + b.delta_power;
    return torsion_normalize(t);
}

inline std::string torsion_str(const TorsionElement& t) {
    if (!t.known) return "unknown";
    if (t.is_zero()) return "0";
    std::string s;
    if (t.scalar != 1) s = std::to_string(t.scalar);
    auto emit = [&](const char* n, long long e) {
        if (e <= 0) return;
        if (!s.empty()) s += "*";
        s += n;
        if (e > 1) s += "^" + std::to_string(e);
    };
    emit("eta", t.eta_power);
    emit("nu", t.nu_power);
    emit("Delta", t.delta_power);
    if (s.empty()) s = "1";
    if (t.delta_power < 0) {
        s += "/Delta";
        if (t.delta_power < -1) s += "^" + std::to_string(-t.delta_power);
    }
    return s;
}

// ---- toy model images ----

struct ToyImage {
    long long degree = 0;
    bool matched_row = false;
    std::string row_name;
    std::string element; // "0", a generator label, or "" when unmatched
    TmfEntry entry;
};

inline ToyImage toy_image(const ManifoldInvariants& X) {
    ToyImage im;
    im.degree = toy_degree(X);
    im.entry = lookup(im.degree);
    for (const auto& row : dataset().toy_images) {
        if (X.b2_plus && X.b2_minus && *X.b2_plus == row.b2_plus && *X.b2_minus == row.b2_minus) {
            im.matched_row = true;
            im.row_name = row.name;
            im.element = row.element;
            if (im.element != "0" && im.element != "" &&
                std::find(im.entry.torsion_generators.begin(), im.entry.torsion_generators.end(),
                          im.element) == im.entry.torsion_generators.end())
                im.entry.torsion_generators.push_back(im.element);
            break;
        }
    }
    return im;
}

struct CounterexampleReport {
    ManifoldInvariants manifold;   // CP2 # 9 CP2bar
    long long left_degree = 0;
    std::string left_element;
    std::string left_group;
    long long right_factor_degrees[2] = {0, 0};
    std::string right_element;     // the product nu * 0^9
    bool left_nonzero = false;
    bool equal = true;
    bool degrees_add = false;
};

inline CounterexampleReport connected_sum_counterexample() {
    CounterexampleReport rep;
    ManifoldInvariants cp2 = make_named("CP2");
    ManifoldInvariants cp2bar = make_named("CP2bar");
    ManifoldInvariants X = cp2;
    for (int i = 0; i < 9; ++i) X = connected_sum(X, cp2bar);
    rep.manifold = X;
    ToyImage left = toy_image(X);
    rep.left_degree = left.degree;
    rep.left_element = left.element;
    rep.left_group = left.entry.torsion;
    rep.right_factor_degrees[0] = toy_degree(cp2);
    rep.right_factor_degrees[1] = toy_degree(cp2bar);
    // T[CP2] = nu, T[CP2bar] = 0, so the ninefold product is zero
    rep.right_element = "0";
    rep.left_nonzero = left.element != "0" && !left.element.empty();
    rep.equal = !rep.left_nonzero;
    rep.degrees_add =
        rep.left_degree == rep.right_factor_degrees[0] + 9 * rep.right_factor_degrees[1];
    return rep;
}

} // namespace tmf4d
