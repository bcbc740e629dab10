#include <catch2/catch_amalgamated.hpp>

#include "tmf4d/manifold.hpp"
#include "tmf4d/manifold_expr.hpp"

using namespace tmf4d;

TEST_CASE("elliptic surfaces E(n)") {
    for (long long n = 1; n <= 8; ++n) {
        ManifoldInvariants X = make_elliptic_surface(n);
        CAPTURE(n);
        CHECK(X.euler == 12 * n);
        CHECK(X.signature == -8 * n);
        CHECK(*X.b2_plus == 2 * n - 1);
        CHECK(*X.b2_minus == 10 * n - 1);
        CHECK(X.spin == (n % 2 == 0));
        CHECK(X.simply_connected);
        CHECK(X.euler == 2 + *X.b2_plus + *X.b2_minus);
        CHECK(X.signature == *X.b2_plus - *X.b2_minus);
        CHECK(*X.gluing_genus == 1);
        CHECK(holomorphic_euler(X) == n);
    }
    CHECK_THROWS_AS(make_elliptic_surface(0), DomainError);
}

TEST_CASE("E(2) carries the K3 invariants") {
    ManifoldInvariants a = make_elliptic_surface(2);
    ManifoldInvariants b = make_named("K3");
    CHECK(a.euler == b.euler);
    CHECK(a.signature == b.signature);
    CHECK(a.b2_plus == b.b2_plus);
    CHECK(a.spin == b.spin);
    CHECK(a.simply_connected == b.simply_connected);
}

TEST_CASE("named manifolds") {
    ManifoldInvariants s4 = make_named("S4");
    CHECK(s4.euler == 2);
    CHECK(s4.signature == 0);
    CHECK(s4.spin);

    ManifoldInvariants cp2 = make_named("CP2");
    CHECK(cp2.euler == 3);
    CHECK(cp2.signature == 1);
    CHECK_FALSE(cp2.spin);
    CHECK(holomorphic_euler(cp2) == 1);

    ManifoldInvariants cp2bar = make_named("CP2bar");
    CHECK(cp2bar.signature == -1);
    CHECK_FALSE(chi_h_defined(cp2bar));
    CHECK_THROWS_AS(holomorphic_euler(cp2bar), DomainError);

    ManifoldInvariants e8 = make_named("minusE8");
    CHECK(e8.signature == -8);
    CHECK_FALSE(e8.warnings.empty());

    ManifoldInvariants h = make_named("halfK3");
    CHECK(h.euler == 12);
    CHECK(h.signature == -8);
    CHECK_FALSE(h.spin);
    CHECK_FALSE(h.simply_connected);
    CHECK(h.intersection_form->even);

    CHECK_THROWS_AS(make_named("Q5"), ParseError);
}

TEST_CASE("surface bundle signatures") {
    CHECK(make_surface_bundle_X(3, 3).signature == 1728);
    CHECK(make_surface_bundle_X(2, 3).signature == 4 * 2 * 1 * 8 * 3 / 3);
    CHECK(make_surface_bundle_Xn(3).signature == 8 * 4 * 3 * 2 / 3);
    ManifoldInvariants X = make_surface_bundle_X(2, 5);
    CHECK(*X.fiber_genus == 10);
    CHECK(*X.base_genus == 1 + 2 * 25);
    CHECK(*X.gluing_genus == *X.fiber_genus + *X.base_genus);
    CHECK(X.spin);
    CHECK_FALSE(X.simply_connected);
    CHECK_THROWS_AS(make_surface_bundle_X(1, 3), DomainError);
    CHECK_THROWS_AS(make_surface_bundle_X(2, 4), DomainError);
    CHECK_THROWS_AS(make_surface_bundle_Xn(2), DomainError);
}

TEST_CASE("Z and V agree with their fiber-sum construction") {
    struct Case { long long g, n, r; };
    for (Case c : {Case{2, 3, 1}, Case{2, 3, 2}, Case{2, 5, 1}, Case{3, 3, 1}}) {
        CAPTURE(c.g, c.n, c.r);
        ManifoldInvariants direct = make_Z(c.g, c.n, c.r);
        ManifoldInvariants base = make_surface_bundle_X(c.g, c.n);
        ManifoldInvariants glued =
            fiber_sum(base, knot_surgery(make_elliptic_surface(2 * c.r)), *base.gluing_genus);
        CHECK(direct.euler == glued.euler);
        CHECK(direct.signature == glued.signature);
        CHECK(direct.spin == glued.spin);
    }
    for (long long n : {3, 5}) {
        for (long long r : {1, 2}) {
            CAPTURE(n, r);
            ManifoldInvariants direct = make_V(n, r);
            ManifoldInvariants base = make_surface_bundle_Xn(n);
            ManifoldInvariants glued =
                fiber_sum(base, knot_surgery(make_elliptic_surface(2 * r)), *base.gluing_genus);
            CHECK(direct.euler == glued.euler);
            CHECK(direct.signature == glued.signature);
            CHECK(direct.spin == glued.spin);
        }
    }
    CHECK(make_Z(2, 3, 2).euler == 504);
}

TEST_CASE("admissibility warnings on large r") {
    CHECK(make_Z(2, 3, 4).warnings.empty());
    CHECK(make_Z(2, 3, 5).warnings.size() == 1);
    CHECK(make_Z(2, 3, 5).warnings[0].find("exceeds the admissible bound") != std::string::npos);
    CHECK(make_V(3, 4).warnings.empty());
    CHECK_FALSE(make_V(3, 5).warnings.empty());
}

TEST_CASE("orientation reversal") {
    ManifoldInvariants X = make_elliptic_surface(3);
    ManifoldInvariants Y = orientation_reverse(X);
    CHECK(Y.euler == X.euler);
    CHECK(Y.signature == -X.signature);
    CHECK(Y.b2_plus == X.b2_minus);
    CHECK(Y.b2_minus == X.b2_plus);
    ManifoldInvariants Z = orientation_reverse(Y);
    CHECK(Z.euler == X.euler);
    CHECK(Z.signature == X.signature);
    CHECK(Z.b2_plus == X.b2_plus);
}

TEST_CASE("connected sums") {
    ManifoldInvariants cp2 = make_named("CP2");
    ManifoldInvariants s4 = make_named("S4");
    ManifoldInvariants sum = connected_sum(cp2, s4);
    CHECK(sum.euler == cp2.euler);
    CHECK(sum.signature == cp2.signature);

    // CP2 # 9 CP2bar has the E(1) characteristic numbers
    ManifoldInvariants dp9 = parse_manifold_expr("csum(CP2,9*CP2bar)");
    ManifoldInvariants e1 = make_elliptic_surface(1);
    CHECK(dp9.euler == e1.euler);
    CHECK(dp9.signature == e1.signature);
    CHECK_FALSE(dp9.spin);
    CHECK(dp9.simply_connected);
}

TEST_CASE("fiber sums") {
    ManifoldInvariants e1 = make_elliptic_surface(1);
    ManifoldInvariants acc = e1;
    for (long long n = 2; n <= 5; ++n) {
        acc = fiber_sum(acc, e1, 1);
        ManifoldInvariants en = make_elliptic_surface(n);
        CAPTURE(n);
        CHECK(acc.euler == en.euler);
        CHECK(acc.signature == en.signature);
    }
    CHECK_THROWS_AS(fiber_sum(make_elliptic_surface(2), make_elliptic_surface(4), 2), DomainError);
    CHECK_NOTHROW(fiber_sum(make_elliptic_surface(2), make_elliptic_surface(4), 1));
    CHECK_THROWS_AS(fiber_sum(e1, e1, -1), DomainError);
}

TEST_CASE("Zkm gluings of elliptic pieces") {
    ManifoldInvariants X = make_Zkm(1, 1);
    CHECK(X.signature == -32);
    CHECK(X.euler == 56);
    CHECK((X.euler + X.signature) / 4 == 1 + 1 + 4);
    CHECK(*X.gluing_genus == 1);
    CHECK(X.spin);
    for (long long k : {1, 3, 5}) {
        for (long long m : {1, 3, 5}) {
            ManifoldInvariants Y = make_Zkm(k, m);
            CHECK(Y.signature == -8 * (k + m) - 16);
            CHECK((Y.euler + Y.signature) / 4 == k + m + 4);
        }
    }
    CHECK_THROWS_AS(make_Zkm(2, 1), DomainError);
    CHECK_THROWS_AS(make_Zkm(1, 4), DomainError);
    CHECK_THROWS_AS(make_Zkm(0, 1), DomainError);
}

TEST_CASE("surgery labels") {
    ManifoldInvariants e4k = knot_surgery(make_elliptic_surface(4));
    CHECK(e4k.name == "E(4)_K");
    CHECK(e4k.euler == 48);
    CHECK_FALSE(e4k.gluing_genus.has_value());

    ManifoldInvariants e2l = log_transform(make_elliptic_surface(2));
    CHECK(e2l.name == "E(2)_log");
    CHECK(*e2l.gluing_genus == 1);
}

TEST_CASE("expression parser") {
    CHECK(parse_manifold_expr("E(3)").euler == 36);
    CHECK(parse_manifold_expr("EK(6)").name == "E(6)_K");
    CHECK(parse_manifold_expr("F(2)").spin);
    CHECK_FALSE(parse_manifold_expr("F(3)").spin);
    CHECK(parse_manifold_expr("X(2,3)").signature == make_surface_bundle_X(2, 3).signature);
    CHECK(parse_manifold_expr("Xn(5)").signature == make_surface_bundle_Xn(5).signature);
    CHECK(parse_manifold_expr("Z(2;2,3)").euler == 504);
    CHECK(parse_manifold_expr("V(1;3)").euler == make_V(3, 1).euler);
    CHECK(parse_manifold_expr("Zkm(1,3)").signature == -48);
    CHECK(parse_manifold_expr("rev(CP2)").signature == -1);
    CHECK(parse_manifold_expr("logt(E(2))").name == "E(2)_log");
    CHECK(parse_manifold_expr("K3").euler == 24);

    CHECK(parse_manifold_expr("fsum(E(1),E(1))").euler == 24);
    CHECK(parse_manifold_expr("fsum(E(1),E(1);g=1)").euler == 24);
    CHECK(parse_manifold_expr("rev(fsum(E(1),E(1)))").signature == 16);
    CHECK_THROWS_AS(parse_manifold_expr("fsum(E(2),E(2);g=2)"), DomainError);
    CHECK_THROWS_AS(parse_manifold_expr("fsum(EK(2),EK(2))"), DomainError);

    CHECK_THROWS_AS(parse_manifold_expr("E(3)x"), ParseError);
    CHECK_THROWS_AS(parse_manifold_expr("Q5"), ParseError);
    CHECK_THROWS_AS(parse_manifold_expr(""), ParseError);
    CHECK_THROWS_AS(parse_manifold_expr("csum(CP2)"), ParseError);
    CHECK_THROWS_AS(parse_manifold_expr("X(2,4)"), DomainError);
}

TEST_CASE("record validation catches inconsistent input") {
    ManifoldInvariants X;
    X.name = "bad";
    X.euler = 4;
    X.signature = 3;
    X.b2_plus = 1;
    X.b2_minus = 1;
    CHECK_THROWS_AS(validate_record(X), DomainError);

    X.signature = 0;
    CHECK_NOTHROW(validate_record(X));

    X.simply_connected = true;
    X.euler = 5;
    CHECK_THROWS_AS(validate_record(X), DomainError);

    X.euler = 4;
    X.spin = true;
    X.intersection_form = IntersectionForm{2, 0, false, std::nullopt};
    CHECK_THROWS_AS(validate_record(X), DomainError);
}
