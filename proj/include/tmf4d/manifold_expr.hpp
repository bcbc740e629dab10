#pragma once

/*
 * Mini-grammar for manifold expressions, the CLI's single parsing surface:
 *
 *   expr  := E(n) | EK(n) | F(n) | X(g,n) | Xn(n)
 *          | Z(r;g,n) | V(r;n) | Zkm(k,m)
 *          | CP2 | CP2bar | K3 | K3bar | minusE8 | halfK3 | S4
 *          | rev(expr) | ksurg(expr) | logt(expr)
 *          | csum(item, item, ...)        item := [k '*'] expr
 *          | fsum(expr, expr [; g=INT])
 *
 * EK(n) is shorthand for ksurg(E(n)).  fsum infers the gluing genus from the
 * operands' declared gluing surfaces when ;g= is omitted.
 */

#include "tmf4d/common.hpp"
#include "tmf4d/manifold.hpp"

#include <cctype>
#include <string>

namespace tmf4d {

class ManifoldExprParser {
  public:
    explicit ManifoldExprParser(std::string text) : s_(std::move(text)) {}

    ManifoldInvariants parse() {
        ManifoldInvariants X = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("trailing input at '" + s_.substr(pos_) + "'");
        return X;
    }

  private:
    std::string s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos_) +
                             " in '" + s_ + "'");
        ++pos_;
    }

    long long integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected integer at position " + std::to_string(start));
        return std::stoll(s_.substr(start, pos_ - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected name at position " + std::to_string(start));
        return s_.substr(start, pos_ - start);
    }

    ManifoldInvariants expr() {
        // an item may start with a multiplicity only inside csum; handled there
        std::string name = ident();
        if (!peek('(')) {
            return make_named(name); // throws ParseError for unknown names
        }
        expect('(');
        ManifoldInvariants X = dispatch(name);
        expect(')');
        return X;
    }

    ManifoldInvariants dispatch(const std::string& name) {
        if (name == "E") return make_elliptic_surface(integer());
        if (name == "EK") return knot_surgery(make_elliptic_surface(integer()));
        if (name == "F") return make_hirzebruch(integer());
        if (name == "Xn") return make_surface_bundle_Xn(integer());
        if (name == "X") {
            long long g = integer();
            expect(',');
            return make_surface_bundle_X(g, integer());
        }
        if (name == "Z") {
            long long r = integer();
            expect(';');
            long long g = integer();
            expect(',');
            return make_Z(g, integer(), r);
        }
        if (name == "V") {
            long long r = integer();
            expect(';');
            return make_V(integer(), r);
        }
        if (name == "Zkm") {
            long long k = integer();
            expect(',');
            return make_Zkm(k, integer());
        }
        if (name == "rev") return orientation_reverse(expr());
        if (name == "ksurg") return knot_surgery(expr());
        if (name == "logt") return log_transform(expr());
        if (name == "csum") return csum_body();
        if (name == "fsum") return fsum_body();
        throw ParseError("unknown constructor '" + name + "'");
    }

    ManifoldInvariants csum_item() {
        skip_ws();
        long long mult = 1;
        size_t save = pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            long long k = integer();
            if (peek('*')) {
                expect('*');
                mult = k;
            } else {
                pos_ = save; // not a multiplicity after all
            }
        }
        if (mult < 1) throw ParseError("connected-sum multiplicity must be >= 1");
        ManifoldInvariants X = expr();
        ManifoldInvariants acc = X;
        for (long long i = 1; i < mult; ++i) acc = connected_sum(acc, X);
        return acc;
    }

    ManifoldInvariants csum_body() {
        ManifoldInvariants acc = csum_item();
        bool more = false;
        while (peek(',')) {
            expect(',');
            acc = connected_sum(acc, csum_item());
            more = true;
        }
        if (!more) throw ParseError("csum needs at least two summands");
        return acc;
    }

    ManifoldInvariants fsum_body() {
        ManifoldInvariants A = expr();
        expect(',');
        ManifoldInvariants B = expr();
        std::optional<long long> genus;
        if (peek(';')) {
            expect(';');
            std::string key = ident();
            if (key != "g") throw ParseError("expected g=<genus> after ';' in fsum");
            expect('=');
            genus = integer();
        }
        if (!genus) {
            if (A.gluing_genus && B.gluing_genus && *A.gluing_genus != *B.gluing_genus)
                throw DomainError("fsum operands declare different gluing genera (" +
                                  std::to_string(*A.gluing_genus) + " vs " +
                                  std::to_string(*B.gluing_genus) + "); pass ;g=");
            if (A.gluing_genus) genus = *A.gluing_genus;
            else if (B.gluing_genus) genus = *B.gluing_genus;
            else throw DomainError("neither fsum operand declares a gluing surface; pass ;g=");
        }
        return fiber_sum(A, B, *genus);
    }
};

inline ManifoldInvariants parse_manifold_expr(const std::string& text) {
    return ManifoldExprParser(text).parse();
}

} // namespace tmf4d
