#include <catch2/catch_amalgamated.hpp>

#include "tmf4d/fibersum.hpp"

using namespace tmf4d;

TEST_CASE("star product") {
    MFMonomial a = parse_monomial("E4/Delta");
    MFMonomial b = parse_monomial("2*E6");
    CHECK(mono_str(star(a, b)) == "2*E4*E6/Delta");

    MFMonomial c = parse_monomial("2*E4^2*E6/Delta");
    MFMonomial s = star(a, c);
    CHECK(s.j_power == 1); // E4^3 folded
    CHECK(equal_up_to_j(s, parse_monomial("2*E6/Delta")));

    MFMonomial one = parse_monomial("1");
    MFMonomial same = star(a, one);
    CHECK(mono_str(same) == mono_str(a));

    // both-E6 case folds eps without a Delta compensation
    MFMonomial e6 = parse_monomial("E6");
    CHECK(mono_str(star(e6, e6)) == "1");
    CHECK(mono_str(star(e6, e6, StarRules{1})) == "E4");
    CHECK_THROWS_AS(star(e6, e6, StarRules{-1}), DomainError);

    CHECK(star(a, MFMonomial{}).is_zero());
}

TEST_CASE("hyper fiber-sum formula") {
    CHECK(mono_str(hyper_fibersum(free_generator(-80), free_generator(64))) == "E4/Delta");
    CHECK(mono_str(hyper_fibersum(free_generator(-80), free_generator(48))) == "E4^2/Delta^2");
    CHECK(mono_str(hyper_fibersum(free_generator(4), free_generator(8))) == "2*E6");

    // both factors carry E6: the fold costs 12 in weight, the formula's
    // half-sum term restores it, so degrees still add
    MFMonomial t = hyper_fibersum(free_generator(12), free_generator(4));
    CHECK(degree(t) == 16);
    CHECK(mono_str(t) == "E4^2");

    CHECK_THROWS_AS(hyper_fibersum(free_generator(8), free_generator(16)), DomainError);
    try {
        hyper_fibersum(free_generator(8), free_generator(16));
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("lies in 24Z") != std::string::npos);
    }
}

TEST_CASE("hyper verdicts on manifold pairs") {
    VerdictReport v = verify_hyper_fibersum(make_elliptic_surface(2),
                                            knot_surgery(make_elliptic_surface(4)), 1);
    CHECK(v.pass);
    CHECK(v.lhs_degree == 12);
    CHECK(mono_str(v.lhs) == "2*E6");

    CHECK(verify_hyper_fibersum(make_Zkm(1, 1), make_elliptic_surface(4), 1).pass);
    CHECK(verify_hyper_fibersum(make_Zkm(1, 3), make_Zkm(3, 3), 1).pass);
}

TEST_CASE("synthetic hyper degree sweep") {
    for (long long d1 = -60; d1 <= 60; d1 += 4)
        for (long long d2 = -60; d2 <= 60; d2 += 4) {
            if (mod_floor(d1 + d2, 24) == 0) continue;
            CAPTURE(d1, d2);
            CHECK(verify_hyper_degrees(d1, d2).pass);
        }
}

TEST_CASE("vector fiber-sum formula on the Z family") {
    struct Case { long long n, r; const char* gen; };
    for (Case c : {Case{3, 2, "2*E4*E6/Delta^12"}, Case{3, 3, "E4^2/Delta^12"},
                   Case{3, 4, "2*E6/Delta^12"}, Case{5, 10, "2*E4^2*E6/Delta^52"},
                   Case{5, 12, "2*E4*E6/Delta^52"}, Case{5, 13, "E4^2/Delta^52"},
                   Case{5, 15, "E4/Delta^52"}}) {
        CAPTURE(c.n, c.r);
        VerdictReport v = verify_vector_Z(c.n, c.r);
        CHECK(v.pass);
        CHECK(mono_str(v.lhs) == c.gen);
    }
}

TEST_CASE("vector formula domain") {
    MFMonomial v1 = free_generator(-8);
    CHECK_THROWS_AS(vector_fibersum(v1, v1, 4, 1), DomainError);
    CHECK_THROWS_AS(vector_fibersum(v1, v1, 9, 1), DomainError);
    CHECK_THROWS_AS(vector_fibersum(free_generator(48), v1, 3, 1), DomainError);
    CHECK_THROWS_AS(vector_fibersum(free_generator(-8), free_generator(-16), 3, 1), DomainError);

    // n = 7 uses the shifted star and s depends only on the parity of r
    long long odd = degree(vector_fibersum(v1, v1, 7, 1));
    long long even = degree(vector_fibersum(v1, v1, 7, 2));
    CHECK(odd - even == 24);
    CHECK(degree(vector_fibersum(v1, v1, 7, 3)) == odd);
}

TEST_CASE("E-string elliptic gluings") {
    CHECK(mono_str(estring_fibersum_elliptic(1, 1)) == mono_str(free_generator(232)));
    struct Pair { long long r, s; };
    for (Pair p : {Pair{1, 1}, Pair{1, 2}, Pair{1, 3}, Pair{2, 2}, Pair{1, 4}, Pair{2, 3}}) {
        CAPTURE(p.r, p.s);
        CHECK(verify_estring_elliptic(p.r, p.s).pass);
    }
    CHECK_THROWS_AS(estring_fibersum_elliptic(1, 5), DomainError); // 696 in 24Z
    CHECK_THROWS_AS(estring_fibersum_elliptic(0, 1), DomainError);
}

TEST_CASE("E-string Z-family parts") {
    EstringZParts p32 = estring_Z_parts(3, 2);
    CHECK(p32.d1 == -2972);
    CHECK(p32.d2 == 232);
    CHECK(p32.c_shift == 0);
    CHECK(p32.prefactor == -22);

    EstringZParts p71 = estring_Z_parts(7, 1);
    CHECK(p71.d1 == -41916);
    CHECK(p71.c_shift == 1);
    CHECK(p71.prefactor == -102);

    // k(r) swings the prefactor by one between parities, period two in r
    for (long long n = 3; n <= 13; n += 2) {
        CAPTURE(n);
        CHECK(estring_Z_parts(n, 1).prefactor - estring_Z_parts(n, 2).prefactor == 1);
        CHECK(estring_Z_parts(n, 1).prefactor == estring_Z_parts(n, 3).prefactor);
        CHECK(estring_Z_parts(n, 2).prefactor == estring_Z_parts(n, 4).prefactor);
    }

    CHECK_THROWS_AS(estring_Z_parts(17, 1), DomainError);
    CHECK_THROWS_AS(estring_Z_parts(4, 1), DomainError);
    CHECK_THROWS_AS(estring_Z_parts(3, 0), DomainError);
}

TEST_CASE("E-string Z-family verdicts") {
    struct Case { long long n, r; };
    for (Case c : {Case{3, 2}, Case{3, 3}, Case{3, 4}, Case{5, 1}, Case{5, 2}, Case{5, 3},
                   Case{7, 1}, Case{7, 2}, Case{7, 3}, Case{7, 4}, Case{9, 1}, Case{9, 2}}) {
        CAPTURE(c.n, c.r);
        VerdictReport v = verify_estring_Z(c.n, c.r);
        CHECK(v.pass);
        CHECK(v.instance == "Z(" + std::to_string(c.r) + ";2," + std::to_string(c.n) + ")");
    }
    CHECK(mono_str(verify_estring_Z(3, 2).lhs) == "2*E4*E6/Delta^137");
    CHECK(mono_str(verify_estring_Z(9, 1).lhs) == "E4/Delta^3925");

    // glued degree in 24Z sits outside the formula's domain
    CHECK_THROWS_AS(estring_fibersum_Z(3, 1), DomainError);

    // the printed s(15) does not close the weight bookkeeping; the mismatch
    // is reported, not patched
    CHECK_FALSE(verify_estring_Z(15, 1).pass);
}
