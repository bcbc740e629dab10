#pragma once

/*
 * Exact Laurent series in q over arbitrary-precision integers.
 *
 * A QSeries knows its coefficients for all exponents e with e < trunc();
 * everything at or above trunc() is undetermined, not zero.  Truncation
 * orders propagate conservatively through arithmetic, so a result never
 * claims coefficients it cannot actually know.  All divisions are exact;
 * a non-integral division throws DomainError.
 */

#include "tmf4d/common.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace tmf4d {

class QSeries {
public:
    static QSeries zero(long long trunc) {
        QSeries s;
        s.min_ = trunc;
        s.trunc_ = trunc;
        return s;
    }

    static QSeries monomial(Int c, long long e, long long trunc) {
        if (c == 0 || e >= trunc) return zero(trunc);
        QSeries s;
        s.min_ = e;
        s.trunc_ = trunc;
        s.coef_.assign(static_cast<size_t>(trunc - e), Int(0));
        s.coef_[0] = std::move(c);
        return s;
    }

    static QSeries one(long long trunc) { return monomial(Int(1), 0, trunc); }

    bool is_zero() const { return coef_.empty(); }
    long long truncation_order() const { return trunc_; }

    // exponent of the lowest nonzero coefficient; trunc() for the zero series
    long long min_exponent() const { return min_; }

    const Int& coeff(long long e) const {
        if (e >= trunc_)
            throw DomainError("coefficient of q^" + std::to_string(e) +
                              " not determined at truncation order " + std::to_string(trunc_));
        if (e < min_) return zero_coeff();
        return coef_[static_cast<size_t>(e - min_)];
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        long long t = std::min(a.trunc_, b.trunc_);
        long long lo = std::min(a.min_, b.min_);
        if (lo >= t) return zero(t);
        QSeries r;
        r.min_ = lo;
        r.trunc_ = t;
        r.coef_.assign(static_cast<size_t>(t - lo), Int(0));
        a.add_into(r);
        b.add_into(r);
        r.strip();
        return r;
    }

    friend QSeries operator-(const QSeries& a) {
        QSeries r = a;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long long t = std::min(a.trunc_ + b.min_, b.trunc_ + a.min_);
        if (a.is_zero() || b.is_zero()) return zero(t);
        long long lo = a.min_ + b.min_;
        QSeries r;
        r.min_ = lo;
        r.trunc_ = t;
        if (lo >= t) return zero(t);
        r.coef_.assign(static_cast<size_t>(t - lo), Int(0));
        for (size_t i = 0; i < a.coef_.size(); ++i) {
            if (a.coef_[i] == 0) continue;
            long long ea = a.min_ + static_cast<long long>(i);
            long long lim = t - ea - b.min_;
            if (lim <= 0) continue;
            size_t jmax = std::min(b.coef_.size(), static_cast<size_t>(lim));
            for (size_t j = 0; j < jmax; ++j) {
                if (b.coef_[j] == 0) continue;
                r.coef_[static_cast<size_t>(ea + b.min_ + static_cast<long long>(j) - lo)] +=
                    a.coef_[i] * b.coef_[j];
            }
        }
        r.strip();
        return r;
    }

    friend QSeries operator*(const Int& c, const QSeries& a) {
        if (c == 0) return zero(a.trunc_);
        QSeries r = a;
        for (auto& x : r.coef_) x *= c;
        return r;
    }

    // 1/this.  Needs a nonzero series; every internal division must be exact.
    QSeries inverse() const {
        if (is_zero()) throw DomainError("cannot invert the zero series");
        const Int& u = coef_[0];
        long long L = min_;
        long long t = trunc_ - 2 * L;
        QSeries r;
        r.min_ = -L;
        r.trunc_ = t;
        long long n = t - (-L);
        if (n <= 0) throw DomainError("truncation order too small to invert");
        r.coef_.assign(static_cast<size_t>(n), Int(0));
        r.coef_[0] = exact_div(Int(1), u);
        for (long long k = 1; k < n; ++k) {
            Int acc = 0;
            long long imax = std::min<long long>(k, static_cast<long long>(coef_.size()) - 1);
            for (long long i = 1; i <= imax; ++i)
                acc += coef_[static_cast<size_t>(i)] * r.coef_[static_cast<size_t>(k - i)];
            r.coef_[static_cast<size_t>(k)] = exact_div(-acc, u);
        }
        r.strip();
        return r;
    }

    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

    QSeries pow(long long k) const {
        if (k < 0) return inverse().pow(-k);
        QSeries acc = one(trunc_);
        QSeries base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    // drop knowledge above a smaller truncation order
    QSeries truncated(long long t) const {
        if (t >= trunc_) return *this;
        QSeries r;
        r.min_ = min_;
        r.trunc_ = t;
        if (min_ < t)
            r.coef_.assign(coef_.begin(), coef_.begin() + static_cast<size_t>(t - min_));
        else
            r.min_ = t;
        r.strip();
        return r;
    }

    bool operator==(const QSeries& o) const {
        return min_ == o.min_ && trunc_ == o.trunc_ && coef_ == o.coef_;
    }

    bool equal_to_order(const QSeries& o, long long n) const {
        if (n > trunc_ || n > o.trunc_)
            throw DomainError("comparison order exceeds truncation order");
        long long lo = std::min(min_, o.min_);
        for (long long e = lo; e < n; ++e)
            if (coeff(e) != o.coeff(e)) return false;
        return true;
    }

    std::string str(long long max_terms = 12) const {
        if (is_zero()) return "0 + O(q^" + std::to_string(trunc_) + ")";
        std::string out;
        long long shown = 0;
        for (long long e = min_; e < trunc_ && shown < max_terms; ++e) {
            const Int& c = coeff(e);
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            Int a = abs(c);
            if (a != 1 || e == 0) out += a.str();
            if (e != 0) {
                if (a != 1) out += "*";
                out += "q";
                if (e != 1) out += "^" + std::to_string(e);
            }
            ++shown;
        }
        return out + " + O(q^" + std::to_string(trunc_) + ")";
    }

private:
    long long min_ = 0;
    long long trunc_ = 0;
    std::vector<Int> coef_;

    static const Int& zero_coeff() {
        static const Int z(0);
        return z;
    }

    static Int exact_div(Int a, const Int& b) {
        Int q = a / b;
        if (q * b != a) throw DomainError("non-exact division in series arithmetic");
        return q;
    }

    void add_into(QSeries& r) const {
        for (size_t i = 0; i < coef_.size(); ++i) {
            long long e = min_ + static_cast<long long>(i);
            if (e >= r.trunc_) break;
            r.coef_[static_cast<size_t>(e - r.min_)] += coef_[i];
        }
    }

    void strip() {
        size_t lead = 0;
        while (lead < coef_.size() && coef_[lead] == 0) ++lead;
        if (lead == coef_.size()) {
            coef_.clear();
            min_ = trunc_;
            return;
        }
        if (lead > 0) {
            coef_.erase(coef_.begin(), coef_.begin() + static_cast<long long>(lead));
            min_ += static_cast<long long>(lead);
        }
    }
};

inline Int divisor_power_sum(long long n, int k) {
    Int s = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        Int p = 1, q = 1;
        for (int i = 0; i < k; ++i) { p *= d; q *= n / d; }
        s += p;
        if (d != n / d) s += q;
    }
    return s;
}

inline QSeries eisenstein_e4(long long order) {
    QSeries s = QSeries::one(order);
    for (long long n = 1; n < order; ++n)
        s = s + QSeries::monomial(Int(240) * divisor_power_sum(n, 3), n, order);
    return s;
}

inline QSeries eisenstein_e6(long long order) {
    QSeries s = QSeries::one(order);
    for (long long n = 1; n < order; ++n)
        s = s + QSeries::monomial(Int(-504) * divisor_power_sum(n, 5), n, order);
    return s;
}

// Delta = q * prod_{n>=1} (1-q^n)^24, computed from the product.
// The Eisenstein route (E4^3 - E6^2)/1728 is checked against this in tests.
inline QSeries delta_series(long long order) {
    std::vector<Int> binom(25);
    binom[0] = 1;
    for (int i = 1; i <= 24; ++i) binom[i] = binom[i - 1] * (25 - i) / i;
    QSeries acc = QSeries::one(order);
    for (long long n = 1; n < order; ++n) {
        QSeries f = QSeries::zero(order);
        for (int i = 0; i <= 24 && n * i < order; ++i) {
            Int c = binom[static_cast<size_t>(i)];
            if (i & 1) c = -c;
            f = f + QSeries::monomial(std::move(c), n * i, order);
        }
        acc = acc * f;
    }
    return QSeries::monomial(Int(1), 1, order + 1) * acc;
}

inline QSeries j_series(long long order) {
    long long pad = order + 3;
    QSeries e4 = eisenstein_e4(pad);
    QSeries num = e4 * e4 * e4;
    return (num / delta_series(pad)).truncated(order);
}

// qexp expression grammar: factor { ('*'|'/') factor }, factor = integer |
// name ['^' signed-int], names E4 E6 Delta j.  Division is exact.
inline QSeries parse_q_expression(const std::string& text, long long order) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_int = [&]() -> long long {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected integer at position " + std::to_string(start) + " in '" + text + "'");
        return std::stoll(text.substr(start, pos - start));
    };
    auto parse_factor = [&]() -> QSeries {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression '" + text + "'");
        QSeries base = QSeries::zero(order);
        if (text[pos] == '-' || text[pos] == '+' || isdigit(static_cast<unsigned char>(text[pos]))) {
            base = QSeries::monomial(Int(parse_int()), 0, order);
        } else {
            size_t start = pos;
            while (pos < text.size() && isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "E4") base = eisenstein_e4(order);
            else if (name == "E6") base = eisenstein_e6(order);
            else if (name == "Delta") base = delta_series(order);
            else if (name == "j") base = j_series(order);
            else throw ParseError("unknown series '" + name + "' in '" + text + "'");
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            base = base.pow(parse_int());
        }
        return base;
    };
    QSeries acc = parse_factor();
    skip_ws();
    while (pos < text.size()) {
        char op = text[pos];
        if (op != '*' && op != '/')
            throw ParseError(std::string("expected '*' or '/' before '") + text[pos] + "' in '" + text + "'");
        ++pos;
        QSeries rhs = parse_factor();
        acc = (op == '*') ? acc * rhs : acc / rhs;
        skip_ws();
    }
    return acc;
}

} // namespace tmf4d
