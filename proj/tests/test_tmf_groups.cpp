#include <catch2/catch_amalgamated.hpp>

#include "tmf4d/tmf_groups.hpp"

using namespace tmf4d;

namespace {
TorsionElement elem(long long scalar, int eta, int nu, long long delta = 0) {
    TorsionElement t;
    t.scalar = scalar;
    t.eta_power = eta;
    t.nu_power = nu;
    t.delta_power = delta;
    return torsion_normalize(t);
}
} // namespace

TEST_CASE("free generator table") {
    CHECK(mono_str(free_generator(0)) == "1");
    CHECK(mono_str(free_generator(4)) == "2*E4^2*E6/Delta");
    CHECK(mono_str(free_generator(8)) == "E4");
    CHECK(mono_str(free_generator(20)) == "2*E4*E6");
    CHECK(mono_str(free_generator(24)) == "24*Delta");
    CHECK(mono_str(free_generator(28)) == "2*E4^2*E6");
    CHECK(mono_str(free_generator(48)) == "12*Delta^2");
    CHECK(mono_str(free_generator(-16)) == "E4/Delta");
    CHECK(mono_str(free_generator(-160)) == "E4/Delta^7");
    CHECK_THROWS_AS(free_generator(6), DomainError);
    CHECK_THROWS_AS(free_generator(-2), DomainError);
    try {
        free_generator(6);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("no free polynomial part") != std::string::npos);
    }
}

TEST_CASE("free generators repeat with period 576 up to Delta^24") {
    for (long long d = -120; d <= 120; d += 4) {
        CAPTURE(d);
        MFMonomial lo = free_generator(d);
        MFMonomial hi = free_generator(d + 576);
        CHECK(hi.coeff == lo.coeff);
        CHECK(hi.j_power == lo.j_power);
        CHECK(hi.e4_power == lo.e4_power);
        CHECK(hi.e6_power == lo.e6_power);
        CHECK(hi.delta_power == lo.delta_power + 24);
    }
}

TEST_CASE("eta/nu algebra") {
    TorsionElement eta = elem(1, 1, 0);
    TorsionElement nu = elem(1, 0, 1);
    CHECK(torsion_str(eta) == "eta");
    CHECK(torsion_str(nu) == "nu");

    CHECK(torsion_str(torsion_mul(torsion_mul(eta, eta), eta)) == "12*nu"); // eta^3 = 12 nu
    CHECK(elem(2, 1, 0).is_zero());                                         // 2 eta = 0
    CHECK(elem(24, 0, 1).is_zero());                                        // 24 nu = 0
    CHECK(elem(23, 0, 1) == elem(-1, 0, 1));
    CHECK(elem(1, 4, 0).is_zero());                                         // eta^4 = 0
    CHECK(elem(1, 0, 4).is_zero());                                         // nu^4 = 0
    CHECK(elem(2, 0, 2).is_zero());                                         // 2 nu^2 = 0
    CHECK(torsion_str(elem(3, 0, 2)) == "nu^2");
    CHECK_FALSE(torsion_mul(eta, nu).known);                                // no printed relation
    CHECK(torsion_str(torsion_mul(eta, nu)) == "unknown");

    TorsionElement nud = elem(1, 0, 1, -2);
    CHECK(torsion_str(nud) == "nu/Delta^2");
    CHECK(torsion_str(elem(8, 1, 0, -1)) == "0");
    CHECK(torsion_str(elem(1, 1, 0, -1)) == "eta/Delta");
}

TEST_CASE("dataset") {
    const TmfDataset& ds = dataset();
    CHECK(ds.version == "1.0");
    CHECK(ds.periodicity == 576);
    CHECK(ds.entries.size() == 20);
    CHECK(ds.toy_images.size() == 8);
}

TEST_CASE("lookup merges the rule and the tabulated groups") {
    TmfEntry e16 = lookup(16);
    CHECK(e16.poly_part == "Z[x]");
    CHECK(e16.torsion == "Z[x]");
    REQUIRE(e16.torsion_generators.size() == 1);
    CHECK(e16.torsion_generators[0] == "sigma(Y8 x Y8)");
    CHECK(e16.source == "rule+paper_table");
    CHECK(mono_str(*e16.free_gen) == "E4^2");
    CHECK_FALSE(e16.connective_zero);

    TmfEntry e19 = lookup(19);
    CHECK(e19.torsion == "0");
    CHECK(e19.poly_part.empty());
    CHECK_FALSE(e19.free_gen.has_value());
    CHECK(e19.source == "paper_table");

    TmfEntry e8 = lookup(8);
    CHECK(e8.source == "rule");
    CHECK(e8.torsion == "unknown");
    CHECK(e8.poly_part == "Z[x]");

    TmfEntry em23 = lookup(-23);
    CHECK(em23.torsion == "(Z/2)[x]");
    CHECK(em23.poly_part == "(Z/2)[x]");
    REQUIRE(em23.torsion_generators.size() == 2);
    CHECK(em23.torsion_generators[1] == "8*eta/Delta");
    CHECK(em23.connective_zero);

    TmfEntry em45 = lookup(-45);
    CHECK(em45.torsion == "Z/24");
    CHECK(em45.torsion_generators[0] == "T_(B22;1)");
}

TEST_CASE("poly part follows d mod 8") {
    CHECK(lookup(0).poly_part == "Z[x]");
    CHECK(lookup(4).poly_part == "Z[x]");
    CHECK(lookup(1).poly_part == "(Z/2)[x]");
    CHECK(lookup(2).poly_part == "(Z/2)[x]");
    for (long long m : {3, 5, 6, 7}) CHECK(lookup(m + 40).poly_part.empty());
    CHECK(lookup(-22).poly_part == "(Z/2)[x]");
}

TEST_CASE("lookup is 576-periodic") {
    for (long long d : {16, 19, -23, -45, 1, 3, 34}) {
        CAPTURE(d);
        TmfEntry a = lookup(d);
        TmfEntry b = lookup(d + 576);
        CHECK(a.torsion == b.torsion);
        CHECK(a.torsion_generators == b.torsion_generators);
        CHECK(a.poly_part == b.poly_part);
        CHECK(a.citation == b.citation);
    }
}

TEST_CASE("parse_dataset reads external files") {
    std::string text = R"({
        "version": "test",
        "periodicity": 8,
        "entries": [
            {"degree": 5, "group": "Z/7", "generators": ["g"], "citation": "c"}
        ],
        "toy_images": [
            {"name": "row", "b2_plus": 1, "b2_minus": 2, "degree": -1,
             "element": "eta", "citation": "c2"}
        ]
    })";
    TmfDataset ds = parse_dataset(text);
    CHECK(ds.version == "test");
    CHECK(ds.periodicity == 8);
    REQUIRE(ds.entries.size() == 1);
    CHECK(ds.entries[0].degree == 5);
    CHECK(ds.entries[0].group == "Z/7");
    REQUIRE(ds.toy_images.size() == 1);
    CHECK(ds.toy_images[0].b2_minus == 2);
}

TEST_CASE("toy images") {
    ToyImage e1 = toy_image(make_elliptic_surface(1));
    CHECK(e1.degree == -15);
    CHECK(e1.matched_row);
    CHECK(e1.row_name == "halfK3"); // same (b2+, b2-) = (1, 9)
    CHECK(e1.element == "eta*E4/Delta");
    CHECK(e1.entry.torsion == "Z/2[x]");
    REQUIRE(e1.entry.torsion_generators.size() == 1); // no duplicate append

    ToyImage cp2 = toy_image(make_named("CP2"));
    CHECK(cp2.degree == 3);
    CHECK(cp2.element == "nu");
    CHECK(cp2.entry.torsion == "Z/24");

    ToyImage k3bar = toy_image(make_named("K3bar"));
    CHECK(k3bar.degree == 51);
    CHECK(k3bar.element == "nu*Delta^2");
    CHECK(k3bar.entry.torsion == "unknown");
    REQUIRE(k3bar.entry.torsion_generators.size() == 1);
    CHECK(k3bar.entry.torsion_generators[0] == "nu*Delta^2");

    ToyImage k3 = toy_image(make_named("K3"));
    CHECK(k3.degree == -29);
    CHECK(k3.element == "0");
}

TEST_CASE("connected sum counterexample") {
    CounterexampleReport rep = connected_sum_counterexample();
    CHECK(rep.left_degree == -15);
    CHECK(rep.right_factor_degrees[0] == 3);
    CHECK(rep.right_factor_degrees[1] == -2);
    CHECK(rep.degrees_add);
    CHECK(rep.left_element == "eta*E4/Delta");
    CHECK(rep.left_nonzero);
    CHECK(rep.right_element == "0");
    CHECK_FALSE(rep.equal);
}
