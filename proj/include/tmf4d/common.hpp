#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tmf4d {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad input text (CLI expressions, monomial strings). Exit code 2 at the CLI.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically out-of-domain request (non-integral division, degree outside
// a formula's stated range, missing invariant). Exit code 3 at the CLI.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_str(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool rat_is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

inline long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

inline long long mod_floor(long long a, long long b) {
    return a - b * floor_div(a, b);
}

} // namespace tmf4d
