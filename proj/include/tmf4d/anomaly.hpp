#pragma once

/*
 * From I8 = alpha*c2(R)^2 + beta*c2(R)p1 + gamma*p1^2 + delta*p2 (flavor term
 * dropped) to the 2d gravitational anomaly
 *
 *     c_R - c_L = 18(beta - 8*gamma - 4*delta)*sigma + 12*beta*chi
 *
 * and the TMF degree d = 2(c_R - c_L).  The toy model bypasses the anomaly
 * formula entirely: d = 3*b2_plus - 2*b2_minus.
 *
 * The rank-1 E-string p2 coefficient ships in two variants: the default
 * -116/5760 reproduces every tabulated degree; the "verbatim" -29/5760 is kept
 * selectable because it is what the source I8 literally says, and selecting it
 * surfaces a documented non-integer degree (see tests).
 */

#include "tmf4d/common.hpp"
#include "tmf4d/manifold.hpp"

#include <string>

namespace tmf4d {

enum class Theory { toy, hypermultiplet, vector_multiplet, tensor, estring_rank1 };

inline const char* theory_name(Theory t) {
    switch (t) {
        case Theory::toy: return "toy";
        case Theory::hypermultiplet: return "hypermultiplet";
        case Theory::vector_multiplet: return "vector";
        case Theory::tensor: return "tensor";
        case Theory::estring_rank1: return "estring_rank1";
    }
    return "?";
}

inline Theory parse_theory(const std::string& s) {
    if (s == "toy") return Theory::toy;
    if (s == "hyper" || s == "hypermultiplet") return Theory::hypermultiplet;
    if (s == "vector" || s == "vector_multiplet") return Theory::vector_multiplet;
    if (s == "tensor") return Theory::tensor;
    if (s == "estring" || s == "estring_rank1") return Theory::estring_rank1;
    throw ParseError("unknown theory '" + s + "' (expected toy|hyper|vector|tensor|estring)");
}

struct TheorySpec {
    Theory theory;
    Rat alpha, beta, gamma, delta;
    bool table_verified; // tensor has no table exercising it
};

inline TheorySpec theory_spec(Theory t, bool verbatim_estring_delta = false) {
    switch (t) {
        case Theory::toy:
            return {t, 0, 0, 0, 0, true};
        case Theory::hypermultiplet:
            return {t, 0, 0, Rat(7, 5760), Rat(-4, 5760), true};
        case Theory::vector_multiplet:
            return {t, Rat(-1, 24), Rat(-1, 48), Rat(-7, 5760), Rat(4, 5760), true};
        case Theory::tensor:
            return {t, Rat(1, 24), Rat(1, 48), Rat(23, 5760), Rat(-116, 5760), false};
        case Theory::estring_rank1:
            return {t, Rat(13, 24), Rat(-11, 48), Rat(29 * 7, 5760),
                    verbatim_estring_delta ? Rat(-29, 5760) : Rat(-4 * 29, 5760), true};
    }
    throw DomainError("bad theory enum");
}

inline Rat gravitational_anomaly(const TheorySpec& spec, const ManifoldInvariants& X) {
    return 18 * (spec.beta - 8 * spec.gamma - 4 * spec.delta) * X.signature +
           12 * spec.beta * X.euler;
}

inline long long toy_degree(const ManifoldInvariants& X) {
    if (!X.b2_plus || !X.b2_minus)
        throw DomainError(X.name + ": toy degree needs b2_plus and b2_minus");
    return 3 * *X.b2_plus - 2 * *X.b2_minus;
}

inline long long tmf_degree(Theory t, const ManifoldInvariants& X,
                            bool verbatim_estring_delta = false) {
    if (t == Theory::toy) return toy_degree(X);
    Rat d = 2 * gravitational_anomaly(theory_spec(t, verbatim_estring_delta), X);
    if (!rat_is_integer(d))
        throw DomainError(std::string(theory_name(t)) + " degree on " + X.name +
                          " is not an integer: " + rat_str(d));
    return numerator(d).convert_to<long long>();
}

inline long long closed_form_degree(Theory t, const ManifoldInvariants& X) {
    switch (t) {
        case Theory::toy:
            return toy_degree(X);
        case Theory::hypermultiplet:
            if (mod_floor(X.signature, 4) != 0)
                throw DomainError(X.name + ": sigma not divisible by 4");
            return -X.signature / 4;
        case Theory::vector_multiplet:
            return -2 * holomorphic_euler(X);
        case Theory::estring_rank1:
            return -2 * (5 * X.signature + 11 * holomorphic_euler(X));
        case Theory::tensor:
            throw DomainError("no closed-form degree for the tensor multiplet");
    }
    throw DomainError("bad theory enum");
}

struct TheoryEligibility {
    std::string theory;
    bool degree_defined = false;
    long long degree = 0;
    bool degree_in_4Z = false;
};

struct EligibilityReport {
    bool spin = false;
    bool simply_connected = false;
    std::vector<TheoryEligibility> theories;
};

inline EligibilityReport check_compactification_eligibility(const ManifoldInvariants& X) {
    EligibilityReport rep;
    rep.spin = X.spin;
    rep.simply_connected = X.simply_connected;
    for (Theory t : {Theory::toy, Theory::hypermultiplet, Theory::vector_multiplet, Theory::tensor,
                     Theory::estring_rank1}) {
        TheoryEligibility e;
        e.theory = theory_name(t);
        try {
            e.degree = tmf_degree(t, X);
            e.degree_defined = true;
            e.degree_in_4Z = mod_floor(e.degree, 4) == 0;
        } catch (const DomainError&) {
            e.degree_defined = false;
        }
        rep.theories.push_back(e);
    }
    return rep;
}

} // namespace tmf4d
