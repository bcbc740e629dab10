#pragma once

/*
 * Chiral WZW central charges c = k dim g / (k + h_vee) over the simple Lie
 * algebras, and an exhaustive exact-rational search for (g, k) pairs hitting
 * a target charge.  Negative levels are allowed, the pole k = -h_vee is not.
 */

#include "tmf4d/common.hpp"

#include <string>
#include <vector>

namespace tmf4d {

enum class Series { A, B, C, D, E6, E7, E8, F4, G2 };

inline const char* series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::E6: return "E6";
        case Series::E7: return "E7";
        case Series::E8: return "E8";
        case Series::F4: return "F4";
        case Series::G2: return "G2";
    }
    return "?";
}

struct SimpleLieAlgebra {
    Series series = Series::A;
    long long rank = 1;

    bool operator==(const SimpleLieAlgebra&) const = default;
};

inline long long min_rank(Series s) {
    switch (s) {
        case Series::A: return 1;
        case Series::B: return 2; // B1 = A1
        case Series::C: return 2; // C1 = A1
        case Series::D: return 3; // D2 is not simple, D3 = A3 kept (isomorphic data co-occur)
        case Series::E6: return 6;
        case Series::E7: return 7;
        case Series::E8: return 8;
        case Series::F4: return 4;
        case Series::G2: return 2;
    }
    return 1;
}

inline bool is_exceptional(Series s) {
    return s == Series::E6 || s == Series::E7 || s == Series::E8 || s == Series::F4 ||
           s == Series::G2;
}

inline SimpleLieAlgebra make_algebra(Series s, long long rank) {
    if (is_exceptional(s)) {
        if (rank != min_rank(s))
            throw DomainError(std::string(series_name(s)) + " has fixed rank " +
                              std::to_string(min_rank(s)));
        return SimpleLieAlgebra{s, rank};
    }
    if (rank < min_rank(s))
        throw DomainError(std::string(series_name(s)) + "_n requires n >= " +
                          std::to_string(min_rank(s)));
    return SimpleLieAlgebra{s, rank};
}

inline long long algebra_dim(const SimpleLieAlgebra& g) {
    long long n = g.rank;
    switch (g.series) {
        case Series::A: return n * (n + 2);
        case Series::B: return n * (2 * n + 1);
        case Series::C: return n * (2 * n + 1);
        case Series::D: return n * (2 * n - 1);
        case Series::E6: return 78;
        case Series::E7: return 133;
        case Series::E8: return 248;
        case Series::F4: return 52;
        case Series::G2: return 14;
    }
    return 0;
}

inline long long dual_coxeter(const SimpleLieAlgebra& g) {
    long long n = g.rank;
    switch (g.series) {
        case Series::A: return n + 1;
        case Series::B: return 2 * n - 1;
        case Series::C: return n + 1;
        case Series::D: return 2 * n - 2;
        case Series::E6: return 12;
        case Series::E7: return 18;
        case Series::E8: return 30;
        case Series::F4: return 9;
        case Series::G2: return 4;
    }
    return 0;
}

inline std::string algebra_name(const SimpleLieAlgebra& g) {
    if (is_exceptional(g.series)) return series_name(g.series);
    return std::string(series_name(g.series)) + std::to_string(g.rank);
}

inline Rat central_charge(const SimpleLieAlgebra& g, long long k) {
    long long h = dual_coxeter(g);
    if (k == -h)
        throw DomainError("level k = " + std::to_string(k) + " hits the pole k = -h_vee for " +
                          algebra_name(g));
    return Rat(k * algebra_dim(g)) / (k + h); // divide: k + h may be negative
}

struct WzwHit {
    SimpleLieAlgebra algebra;
    long long level = 0;
    Rat charge;
};

// Exhaustive scan in deterministic (series, rank, level) order; exact rational
// equality, pole levels skipped, k = 0 kept (it realizes target 0).
inline std::vector<WzwHit> search_by_central_charge(const Rat& target, long long max_rank = 24,
                                                    long long level_min = -100,
                                                    long long level_max = 100) {
    if (max_rank < 1) throw DomainError("max_rank must be >= 1");
    if (level_min > level_max) throw DomainError("empty level range");
    std::vector<WzwHit> hits;
    auto scan = [&](const SimpleLieAlgebra& g) {
        long long h = dual_coxeter(g);
        for (long long k = level_min; k <= level_max; ++k) {
            if (k == -h) continue;
            Rat c = Rat(k * algebra_dim(g)) / (k + h);
            if (c == target) hits.push_back(WzwHit{g, k, c});
        }
    };
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E6, Series::E7,
                     Series::E8, Series::F4, Series::G2}) {
        if (is_exceptional(s)) {
            if (min_rank(s) <= max_rank) scan(SimpleLieAlgebra{s, min_rank(s)});
        } else {
            for (long long n = min_rank(s); n <= max_rank; ++n) scan(SimpleLieAlgebra{s, n});
        }
    }
    return hits;
}

} // namespace tmf4d
