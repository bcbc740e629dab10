#pragma once

/*
 * 4-manifolds as invariant records.  Everything downstream (degrees, fiber-sum
 * formulas) consumes only chi, sigma, b-numbers and the spin flag, so a record
 * plus a provenance string is the whole representation; smooth-structure
 * operations (knot surgery, log transform) are provenance markers.
 *
 * b1/b2 are optional: the surface-bundle factors X_{g,n}, X_n ship without
 * them, and fiber sums do not try to guess Betti numbers of the result.
 * gluing_genus is the genus of the distinguished surface the manifold is
 * glued along in the catalog constructions (torus fiber for E(n), the
 * Sigma_{f+b} surface for the bundles).
 */

#include "tmf4d/common.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tmf4d {

struct IntersectionForm {
    long long rank = 0;
    long long signature = 0;
    bool even = false;
    std::optional<std::array<long long, 4>> matrix; // row-major 2x2 when small enough to print

    bool operator==(const IntersectionForm&) const = default;
};

struct ManifoldInvariants {
    std::string name;
    long long euler = 0;
    long long signature = 0;
    std::optional<long long> b1;
    std::optional<long long> b2_plus;
    std::optional<long long> b2_minus;
    bool spin = false;
    bool simply_connected = false;
    std::optional<IntersectionForm> intersection_form;
    std::optional<long long> fiber_genus;
    std::optional<long long> base_genus;
    std::optional<long long> gluing_genus;
    std::string provenance;
    std::vector<std::string> warnings;
};

inline void validate_record(const ManifoldInvariants& X) {
    if (X.b2_plus && X.b2_minus) {
        if (X.signature != *X.b2_plus - *X.b2_minus)
            throw DomainError(X.name + ": signature != b2_plus - b2_minus");
        if (X.intersection_form && X.intersection_form->rank != *X.b2_plus + *X.b2_minus)
            throw DomainError(X.name + ": intersection form rank != b2");
    }
    if (X.simply_connected) {
        if (X.b1 && *X.b1 != 0) throw DomainError(X.name + ": simply connected but b1 != 0");
        if (X.b2_plus && X.b2_minus && X.euler != 2 + *X.b2_plus + *X.b2_minus)
            throw DomainError(X.name + ": simply connected but chi != 2 + b2");
    }
    if (X.spin && X.intersection_form && !X.intersection_form->even)
        throw DomainError(X.name + ": spin manifold with odd intersection form");
}

inline bool chi_h_defined(const ManifoldInvariants& X) {
    return mod_floor(X.euler + X.signature, 4) == 0;
}

inline long long holomorphic_euler(const ManifoldInvariants& X) {
    if (!chi_h_defined(X))
        throw DomainError(X.name + ": chi + sigma = " + std::to_string(X.euler + X.signature) +
                          " is not divisible by 4, chi_h undefined");
    return (X.euler + X.signature) / 4;
}

inline ManifoldInvariants make_elliptic_surface(long long n) {
    if (n < 1) throw DomainError("E(n) requires n >= 1");
    ManifoldInvariants X;
    X.name = "E(" + std::to_string(n) + ")";
    X.euler = 12 * n;
    X.signature = -8 * n;
    X.b1 = 0;
    X.b2_plus = 2 * n - 1;
    X.b2_minus = 10 * n - 1;
    X.spin = (n % 2 == 0);
    X.simply_connected = true;
    X.intersection_form = IntersectionForm{12 * n - 2, -8 * n, n % 2 == 0, std::nullopt};
    X.fiber_genus = 1;
    X.gluing_genus = 1;
    X.provenance = X.name;
    validate_record(X);
    return X;
}

inline ManifoldInvariants make_hirzebruch(long long n) {
    if (n < 0) throw DomainError("F(n) requires n >= 0");
    ManifoldInvariants X;
    X.name = "F(" + std::to_string(n) + ")";
    X.euler = 4;
    X.signature = 0;
    X.b1 = 0;
    X.b2_plus = 1;
    X.b2_minus = 1;
    X.spin = (n % 2 == 0);
    X.simply_connected = true;
    X.intersection_form = IntersectionForm{2, 0, n % 2 == 0, std::array<long long, 4>{n, 1, 1, 0}};
    X.provenance = X.name;
    validate_record(X);
    return X;
}

inline ManifoldInvariants make_named(const std::string& name) {
    ManifoldInvariants X;
    X.name = name;
    X.provenance = name;
    X.b1 = 0;
    if (name == "CP2") {
        X.euler = 3; X.signature = 1;
        X.b2_plus = 1; X.b2_minus = 0;
        X.spin = false; X.simply_connected = true;
        X.intersection_form = IntersectionForm{1, 1, false, std::nullopt};
    } else if (name == "CP2bar") {
        X.euler = 3; X.signature = -1;
        X.b2_plus = 0; X.b2_minus = 1;
        X.spin = false; X.simply_connected = true;
        X.intersection_form = IntersectionForm{1, -1, false, std::nullopt};
    } else if (name == "K3") {
        X.euler = 24; X.signature = -16;
        X.b2_plus = 3; X.b2_minus = 19;
        X.spin = true; X.simply_connected = true;
        X.intersection_form = IntersectionForm{22, -16, true, std::nullopt};
        X.fiber_genus = 1; X.gluing_genus = 1;
    } else if (name == "K3bar") {
        X.euler = 24; X.signature = 16;
        X.b2_plus = 19; X.b2_minus = 3;
        X.spin = true; X.simply_connected = true;
        X.intersection_form = IntersectionForm{22, 16, true, std::nullopt};
    } else if (name == "minusE8") {
        // topological manifold with form -E8; fine for the toy map, not smooth
        X.euler = 10; X.signature = -8;
        X.b2_plus = 0; X.b2_minus = 8;
        X.spin = true; X.simply_connected = true;
        X.intersection_form = IntersectionForm{8, -8, true, std::nullopt};
        X.warnings.push_back("minusE8 is a topological manifold (no smooth structure)");
    } else if (name == "halfK3") {
        // Enriques surface: same chi, sigma, b2 as E(1) but even form, pi_1 = Z/2
        X.euler = 12; X.signature = -8;
        X.b1 = 0;
        X.b2_plus = 1; X.b2_minus = 9;
        X.spin = false; X.simply_connected = false;
        X.intersection_form = IntersectionForm{10, -8, true, std::nullopt};
    } else if (name == "S4") {
        X.euler = 2; X.signature = 0;
        X.b2_plus = 0; X.b2_minus = 0;
        X.spin = true; X.simply_connected = true;
        X.intersection_form = IntersectionForm{0, 0, true, std::nullopt};
    } else {
        throw ParseError("unknown manifold name '" + name + "'");
    }
    validate_record(X);
    return X;
}

inline ManifoldInvariants make_surface_bundle_X(long long g, long long n) {
    if (g < 2) throw DomainError("X_{g,n} requires g >= 2");
    if (n < 3 || n % 2 == 0) throw DomainError("X_{g,n} requires odd n >= 3");
    ManifoldInvariants X;
    X.name = "X(" + std::to_string(g) + "," + std::to_string(n) + ")";
    long long npow3 = 1;
    for (int i = 0; i < 2 * g - 3; ++i) npow3 *= n;
    long long sigma3 = 4 * g * (g - 1) * (n * n - 1) * npow3;
    if (sigma3 % 3 != 0) throw DomainError("X_{g,n} signature formula not divisible by 3");
    long long f = g * n;
    long long b = 1 + g * (g - 1) * npow3 * n;
    X.signature = sigma3 / 3;
    X.euler = (2 - 2 * f) * (2 - 2 * b);
    X.spin = true;
    X.simply_connected = false;
    X.fiber_genus = f;
    X.base_genus = b;
    X.gluing_genus = f + b;
    X.provenance = X.name;
    validate_record(X);
    return X;
}

inline ManifoldInvariants make_surface_bundle_Xn(long long n) {
    if (n < 3 || n % 2 == 0) throw DomainError("X_n requires odd n >= 3");
    ManifoldInvariants X;
    X.name = "Xn(" + std::to_string(n) + ")";
    long long sigma3 = 8 * (n + 1) * n * (n - 1);
    if (sigma3 % 3 != 0) throw DomainError("X_n signature formula not divisible by 3");
    long long f = 3 * n;
    long long b = 2 * n * n + 1;
    X.signature = sigma3 / 3;
    X.euler = (2 - 2 * f) * (2 - 2 * b);
    X.spin = true;
    X.simply_connected = false;
    X.fiber_genus = f;
    X.base_genus = b;
    X.gluing_genus = f + b;
    X.provenance = X.name;
    validate_record(X);
    return X;
}

namespace detail {
inline void fill_simply_connected_b2(ManifoldInvariants& X) {
    long long b2 = X.euler - 2;
    if ((b2 + X.signature) % 2 != 0) throw DomainError(X.name + ": b2 and sigma parity mismatch");
    X.b1 = 0;
    X.b2_plus = (b2 + X.signature) / 2;
    X.b2_minus = (b2 - X.signature) / 2;
}
} // namespace detail

inline ManifoldInvariants make_Z(long long g, long long n, long long r) {
    if (g < 2) throw DomainError("Z^r_{g,n} requires g >= 2");
    if (n < 3 || n % 2 == 0) throw DomainError("Z^r_{g,n} requires odd n >= 3");
    if (r < 1) throw DomainError("Z^r_{g,n} requires r >= 1");
    ManifoldInvariants base = make_surface_bundle_X(g, n);
    ManifoldInvariants X;
    X.name = "Z(" + std::to_string(r) + ";" + std::to_string(g) + "," + std::to_string(n) + ")";
    X.signature = base.signature - 16 * r;
    X.euler = 4 * g * n * base.base_genus.value() + 24 * r; // 4gn(g(g-1)n^{2g-2}+1) + 24r
    X.spin = true;
    X.simply_connected = true;
    detail::fill_simply_connected_b2(X);
    X.intersection_form = IntersectionForm{X.euler - 2, X.signature, true, std::nullopt};
    long long bound1_num = g * (g - 1) * (n * n - 1);
    long long npow3 = 1;
    for (int i = 0; i < 2 * g - 3; ++i) npow3 *= n;
    long long bound1 = bound1_num * npow3 / 12;
    long long bound2 = 2 + g * n + g * (g - 1) * (n - 1) * npow3;
    long long bound = std::min(bound1, bound2);
    if (r > bound)
        X.warnings.push_back("r=" + std::to_string(r) + " exceeds the admissible bound " +
                             std::to_string(bound) + " (irreducibility not guaranteed)");
    X.provenance = "fiber_sum(" + base.name + ", knot_surgery(E(" + std::to_string(2 * r) +
                   ")), genus=" + std::to_string(base.gluing_genus.value()) + ")";
    validate_record(X);
    return X;
}

inline ManifoldInvariants make_V(long long n, long long r) {
    if (n < 3 || n % 2 == 0) throw DomainError("V^r_n requires odd n >= 3");
    if (r < 1) throw DomainError("V^r_n requires r >= 1");
    ManifoldInvariants base = make_surface_bundle_Xn(n);
    ManifoldInvariants X;
    X.name = "V(" + std::to_string(r) + ";" + std::to_string(n) + ")";
    X.signature = base.signature - 16 * r;
    X.euler = 12 * n * (2 * n * n + 1) + 24 * r;
    X.spin = true;
    X.simply_connected = true;
    detail::fill_simply_connected_b2(X);
    X.intersection_form = IntersectionForm{X.euler - 2, X.signature, true, std::nullopt};
    long long bound1 = (n + 1) * n * (n - 1) / 6;
    long long bound2 = 2 * n * n + n + 2;
    long long bound = std::min(bound1, bound2);
    if (r > bound)
        X.warnings.push_back("r=" + std::to_string(r) + " exceeds the admissible bound " +
                             std::to_string(bound) + " (irreducibility not guaranteed)");
    X.provenance = "fiber_sum(" + base.name + ", knot_surgery(E(" + std::to_string(2 * r) +
                   ")), genus=" + std::to_string(base.gluing_genus.value()) + ")";
    validate_record(X);
    return X;
}

inline ManifoldInvariants make_Zkm(long long k, long long m) {
    if (k < 1 || k % 2 == 0 || m < 1 || m % 2 == 0)
        throw DomainError("Z(k,m)_n requires odd k, m >= 1 (even k or m loses the spin structure)");
    ManifoldInvariants X;
    X.name = "Zkm(" + std::to_string(k) + "," + std::to_string(m) + ")";
    X.signature = -8 * (k + m) - 16;
    X.euler = 4 * (k + m + 4) - X.signature;
    X.spin = true;
    X.simply_connected = true;
    detail::fill_simply_connected_b2(X);
    X.intersection_form = IntersectionForm{X.euler - 2, X.signature, true, std::nullopt};
    // contains torus fibers from the E(k), E(m) ends; the log-transform label n
    // does not move any invariant, so it is not part of the record
    X.gluing_genus = 1;
    X.provenance = X.name;
    validate_record(X);
    return X;
}

inline ManifoldInvariants orientation_reverse(const ManifoldInvariants& X) {
    ManifoldInvariants Y = X;
    Y.signature = -X.signature;
    std::swap(Y.b2_plus, Y.b2_minus);
    if (Y.intersection_form) {
        Y.intersection_form->signature = -Y.intersection_form->signature;
        Y.intersection_form->matrix.reset();
    }
    Y.name = "rev(" + X.name + ")";
    Y.provenance = "rev(" + X.provenance + ")";
    validate_record(Y);
    return Y;
}

inline ManifoldInvariants connected_sum(const ManifoldInvariants& A, const ManifoldInvariants& B) {
    ManifoldInvariants X;
    X.name = A.name + " # " + B.name;
    X.euler = A.euler + B.euler - 2;
    X.signature = A.signature + B.signature;
    if (A.b1 && B.b1) X.b1 = *A.b1 + *B.b1;
    if (A.b2_plus && B.b2_plus) X.b2_plus = *A.b2_plus + *B.b2_plus;
    if (A.b2_minus && B.b2_minus) X.b2_minus = *A.b2_minus + *B.b2_minus;
    X.spin = A.spin && B.spin;
    X.simply_connected = A.simply_connected && B.simply_connected;
    if (A.intersection_form && B.intersection_form) {
        X.intersection_form = IntersectionForm{
            A.intersection_form->rank + B.intersection_form->rank,
            A.intersection_form->signature + B.intersection_form->signature,
            A.intersection_form->even && B.intersection_form->even, std::nullopt};
    }
    X.provenance = "csum(" + A.provenance + ", " + B.provenance + ")";
    X.warnings = A.warnings;
    X.warnings.insert(X.warnings.end(), B.warnings.begin(), B.warnings.end());
    validate_record(X);
    return X;
}

inline ManifoldInvariants fiber_sum(const ManifoldInvariants& A, const ManifoldInvariants& B,
                                    long long genus) {
    if (genus < 0) throw DomainError("fiber sum genus must be >= 0");
    if (A.gluing_genus && *A.gluing_genus != genus)
        throw DomainError("genus mismatch: " + A.name + " declares gluing genus " +
                          std::to_string(*A.gluing_genus) + ", requested " + std::to_string(genus));
    if (B.gluing_genus && *B.gluing_genus != genus)
        throw DomainError("genus mismatch: " + B.name + " declares gluing genus " +
                          std::to_string(*B.gluing_genus) + ", requested " + std::to_string(genus));
    ManifoldInvariants X;
    X.name = A.name + " #_f " + B.name;
    X.euler = A.euler + B.euler - 2 * (2 - 2 * genus);
    X.signature = A.signature + B.signature;
    X.spin = A.spin && B.spin;
    X.simply_connected = A.simply_connected && B.simply_connected;
    X.provenance = "fiber_sum(" + A.provenance + ", " + B.provenance +
                   ", genus=" + std::to_string(genus) + ")";
    X.warnings = A.warnings;
    X.warnings.insert(X.warnings.end(), B.warnings.begin(), B.warnings.end());
    validate_record(X);
    return X;
}

// knot surgery and log transform change the smooth structure only; the record
// keeps chi/sigma/b and drops the distinguished gluing surface, since the
// surgered manifold is glued along a different (higher-genus) surface in the
// catalog constructions.
inline ManifoldInvariants knot_surgery(const ManifoldInvariants& X) {
    ManifoldInvariants Y = X;
    Y.name = X.name + "_K";
    Y.provenance = "knot_surgery(" + X.provenance + ")";
    Y.gluing_genus.reset();
    Y.fiber_genus.reset();
    Y.base_genus.reset();
    return Y;
}

inline ManifoldInvariants log_transform(const ManifoldInvariants& X) {
    ManifoldInvariants Y = X;
    Y.name = X.name + "_log";
    Y.provenance = "log_transform(" + X.provenance + ")";
    return Y;
}

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const IntersectionForm& f) {
    ordered_json o;
    o["rank"] = f.rank;
    o["signature"] = f.signature;
    o["parity"] = f.even ? "even" : "odd";
    if (f.matrix) o["matrix"] = {{(*f.matrix)[0], (*f.matrix)[1]}, {(*f.matrix)[2], (*f.matrix)[3]}};
    return o;
}

inline ordered_json to_json(const ManifoldInvariants& X) {
    ordered_json o;
    o["name"] = X.name;
    o["euler"] = X.euler;
    o["signature"] = X.signature;
    o["b1"] = X.b1 ? ordered_json(*X.b1) : ordered_json(nullptr);
    o["b2_plus"] = X.b2_plus ? ordered_json(*X.b2_plus) : ordered_json(nullptr);
    o["b2_minus"] = X.b2_minus ? ordered_json(*X.b2_minus) : ordered_json(nullptr);
    o["spin"] = X.spin;
    o["simply_connected"] = X.simply_connected;
    o["intersection_form"] = X.intersection_form ? to_json(*X.intersection_form) : ordered_json(nullptr);
    o["gluing_genus"] = X.gluing_genus ? ordered_json(*X.gluing_genus) : ordered_json(nullptr);
    o["provenance"] = X.provenance;
    o["warnings"] = X.warnings;
    return o;
}

} // namespace tmf4d
