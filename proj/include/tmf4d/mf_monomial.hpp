#pragma once

/*
 * Monomials c * j^a * E4^p * E6^eps * Delta^m in the graded ring of level-1
 * modular forms, with j adjoined.  Normal form keeps p in {0,1,2} via
 * E4^3 = j*Delta; eps stays in {0,1} (the E6^2 relation is deliberately not
 * applied here, only the star product ever folds E6 exponents mod 2).
 * weight = 4p + 6*eps + 12m, degree = 2*weight, j is weight-0.
 */

#include "tmf4d/common.hpp"
#include "tmf4d/qseries.hpp"

#include <numeric>
#include <string>

namespace tmf4d {

struct MFMonomial {
    Int coeff = 0;
    long long j_power = 0;
    long long e4_power = 0;
    long long e6_power = 0;
    long long delta_power = 0;

    bool is_zero() const { return coeff == 0; }

    bool operator==(const MFMonomial& o) const {
        if (coeff == 0 && o.coeff == 0) return true;
        return coeff == o.coeff && j_power == o.j_power && e4_power == o.e4_power &&
               e6_power == o.e6_power && delta_power == o.delta_power;
    }
};

inline MFMonomial normalize(Int coeff, long long j, long long e4, long long e6, long long delta) {
    if (j < 0) throw DomainError("negative j exponent");
    if (e4 < 0) throw DomainError("negative E4 exponent");
    if (e6 != 0 && e6 != 1)
        throw DomainError("E6 exponent must be 0 or 1 in normal form (got " + std::to_string(e6) + ")");
    if (coeff == 0) return MFMonomial{};
    while (e4 >= 3) {
        e4 -= 3;
        j += 1;
        delta += 1;
    }
    return MFMonomial{std::move(coeff), j, e4, e6, delta};
}

inline long long weight(const MFMonomial& m) {
    return 4 * m.e4_power + 6 * m.e6_power + 12 * m.delta_power;
}

inline long long degree(const MFMonomial& m) { return 2 * weight(m); }

inline MFMonomial mono_mul(const MFMonomial& a, const MFMonomial& b) {
    if (a.is_zero() || b.is_zero()) return MFMonomial{};
    return normalize(a.coeff * b.coeff, a.j_power + b.j_power, a.e4_power + b.e4_power,
                     a.e6_power + b.e6_power, a.delta_power + b.delta_power);
}

// The tables' coefficient convention for the polynomial-ring generator at a
// given (p, eps, m): 2 when E6 appears, 24/gcd(24, m) for pure Delta powers,
// 1 otherwise.
inline Int canonical_coefficient(long long p, long long eps, long long m) {
    if (eps == 1) return 2;
    if (p == 0) {
        if (m == 0) return 1;
        long long g = std::gcd(24LL, m < 0 ? -m : m);
        return 24 / g;
    }
    return 1;
}

// representative with j stripped and the canonical coefficient; "up to j"
inline MFMonomial canonical_up_to_j(const MFMonomial& m) {
    if (m.is_zero()) return MFMonomial{};
    return MFMonomial{canonical_coefficient(m.e4_power, m.e6_power, m.delta_power), 0,
                      m.e4_power, m.e6_power, m.delta_power};
}

inline bool equal_up_to_j(const MFMonomial& a, const MFMonomial& b) {
    return canonical_up_to_j(a) == canonical_up_to_j(b);
}

inline std::string mono_str(const MFMonomial& m) {
    if (m.is_zero()) return "0";
    std::string num;
    auto emit = [&](const std::string& name, long long e) {
        if (e <= 0) return;
        if (!num.empty()) num += "*";
        num += name;
        if (e > 1) num += "^" + std::to_string(e);
    };
    if (m.coeff != 1) num = m.coeff.str();
    emit("j", m.j_power);
    emit("E4", m.e4_power);
    emit("E6", m.e6_power);
    emit("Delta", m.delta_power);
    if (num.empty()) num = "1";
    if (m.delta_power < 0) {
        num += "/Delta";
        if (m.delta_power < -1) num += "^" + std::to_string(-m.delta_power);
    }
    return num;
}

inline MFMonomial parse_monomial(const std::string& text) {
    size_t slash = text.find('/');
    std::string numer = text.substr(0, slash == std::string::npos ? text.size() : slash);
    long long denom_delta = 0;
    if (slash != std::string::npos) {
        std::string den = text.substr(slash + 1);
        size_t caret = den.find('^');
        std::string base = den.substr(0, caret == std::string::npos ? den.size() : caret);
        if (base != "Delta")
            throw ParseError("denominator must be a Delta power in '" + text + "'");
        denom_delta = 1;
        if (caret != std::string::npos) {
            try {
                denom_delta = std::stoll(den.substr(caret + 1));
            } catch (...) {
                throw ParseError("bad denominator exponent in '" + text + "'");
            }
            if (denom_delta <= 0) throw ParseError("denominator exponent must be positive in '" + text + "'");
        }
    }

    Int coeff = 1;
    long long j = 0, e4 = 0, e6 = 0, delta = 0;
    bool seen_any = false;
    size_t pos = 0;
    while (pos < numer.size()) {
        while (pos < numer.size() && isspace(static_cast<unsigned char>(numer[pos]))) ++pos;
        if (pos >= numer.size()) break;
        size_t start = pos;
        if (numer[pos] == '-' || numer[pos] == '+' || isdigit(static_cast<unsigned char>(numer[pos]))) {
            if (seen_any) throw ParseError("coefficient must come first in '" + text + "'");
            ++pos;
            while (pos < numer.size() && isdigit(static_cast<unsigned char>(numer[pos]))) ++pos;
            try {
                coeff = Int(numer.substr(start, pos - start));
            } catch (...) {
                throw ParseError("bad coefficient in '" + text + "'");
            }
        } else {
            while (pos < numer.size() && isalnum(static_cast<unsigned char>(numer[pos]))) ++pos;
            std::string name = numer.substr(start, pos - start);
            long long e = 1;
            while (pos < numer.size() && isspace(static_cast<unsigned char>(numer[pos]))) ++pos;
            if (pos < numer.size() && numer[pos] == '^') {
                ++pos;
                size_t estart = pos;
                while (pos < numer.size() && isdigit(static_cast<unsigned char>(numer[pos]))) ++pos;
                if (pos == estart) throw ParseError("bad exponent in '" + text + "'");
                e = std::stoll(numer.substr(estart, pos - estart));
            }
            if (name == "j") j += e;
            else if (name == "E4") e4 += e;
            else if (name == "E6") e6 += e;
            else if (name == "Delta") delta += e;
            else if (name == "eta" || name == "nu")
                throw ParseError("'" + name + "' is a torsion generator, not a monomial factor");
            else throw ParseError("unknown factor '" + name + "' in '" + text + "'");
        }
        seen_any = true;
        while (pos < numer.size() && isspace(static_cast<unsigned char>(numer[pos]))) ++pos;
        if (pos < numer.size()) {
            if (numer[pos] != '*')
                throw ParseError(std::string("expected '*' before '") + numer[pos] + "' in '" + text + "'");
            ++pos;
        }
    }
    if (!seen_any) throw ParseError("empty monomial '" + text + "'");
    return normalize(std::move(coeff), j, e4, e6, delta - denom_delta);
}

inline QSeries to_qseries(const MFMonomial& m, long long order) {
    if (m.is_zero()) return QSeries::zero(order);
    // pad so the Laurent divisions land with at least `order` known terms
    long long pad = order + 2 * (m.delta_power < 0 ? -m.delta_power : 0) + 2 * m.j_power + 4;
    QSeries s = QSeries::monomial(m.coeff, 0, pad);
    if (m.e4_power) s = s * eisenstein_e4(pad).pow(m.e4_power);
    if (m.e6_power) s = s * eisenstein_e6(pad).pow(m.e6_power);
    if (m.delta_power) s = s * delta_series(pad).pow(m.delta_power);
    if (m.j_power) s = s * j_series(pad).pow(m.j_power);
    return s.truncated(order);
}

} // namespace tmf4d
