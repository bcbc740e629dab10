#include <catch2/catch_amalgamated.hpp>

#include "tmf4d/char_numbers.hpp"
#include "tmf4d/wzw.hpp"

using namespace tmf4d;

TEST_CASE("dimensions and dual Coxeter numbers") {
    CHECK(algebra_dim(make_algebra(Series::A, 1)) == 3);
    CHECK(algebra_dim(make_algebra(Series::A, 4)) == 24);
    CHECK(algebra_dim(make_algebra(Series::B, 3)) == 21);
    CHECK(algebra_dim(make_algebra(Series::C, 3)) == 21);
    CHECK(algebra_dim(make_algebra(Series::D, 5)) == 45);
    CHECK(algebra_dim(make_algebra(Series::B, 22)) == 990);
    CHECK(algebra_dim(make_algebra(Series::E8, 8)) == 248);
    CHECK(algebra_dim(make_algebra(Series::G2, 2)) == 14);
    CHECK(algebra_dim(make_algebra(Series::F4, 4)) == 52);

    CHECK(dual_coxeter(make_algebra(Series::A, 1)) == 2);
    CHECK(dual_coxeter(make_algebra(Series::B, 3)) == 5);
    CHECK(dual_coxeter(make_algebra(Series::C, 3)) == 4);
    CHECK(dual_coxeter(make_algebra(Series::D, 5)) == 8);
    CHECK(dual_coxeter(make_algebra(Series::B, 22)) == 43);
    CHECK(dual_coxeter(make_algebra(Series::E8, 8)) == 30);
    CHECK(dual_coxeter(make_algebra(Series::G2, 2)) == 4);

    // B2 and C2 carry the same data (so(5) = sp(4)); both are scanned
    CHECK(algebra_dim(make_algebra(Series::B, 2)) == algebra_dim(make_algebra(Series::C, 2)));
    CHECK(dual_coxeter(make_algebra(Series::B, 2)) == 3);
    CHECK(dual_coxeter(make_algebra(Series::C, 2)) == 3);

    CHECK(algebra_name(make_algebra(Series::B, 22)) == "B22");
    CHECK(algebra_name(make_algebra(Series::G2, 2)) == "G2");

    CHECK_THROWS_AS(make_algebra(Series::G2, 3), DomainError);
    CHECK_THROWS_AS(make_algebra(Series::B, 1), DomainError);
    CHECK_THROWS_AS(make_algebra(Series::D, 2), DomainError);
}

TEST_CASE("central charges") {
    CHECK(central_charge(make_algebra(Series::B, 2), -23) == Rat(23, 2));
    CHECK(central_charge(make_algebra(Series::C, 2), -23) == Rat(23, 2));
    CHECK(central_charge(make_algebra(Series::B, 22), 1) == Rat(45, 2));
    CHECK(central_charge(make_algebra(Series::E8, 8), 1) == 8);
    CHECK(central_charge(make_algebra(Series::A, 1), 1) == 1);
    CHECK(central_charge(make_algebra(Series::B, 2), 1) == Rat(5, 2));
    CHECK(central_charge(make_algebra(Series::G2, 2), 1) == Rat(14, 5));
    CHECK(central_charge(make_algebra(Series::A, 3), 0) == 0);
    CHECK_THROWS_AS(central_charge(make_algebra(Series::A, 1), -2), DomainError);
    CHECK_THROWS_AS(central_charge(make_algebra(Series::B, 22), -43), DomainError);
}

namespace {
void expect_hits(const std::vector<WzwHit>& hits,
                 const std::vector<std::tuple<Series, long long, long long>>& want) {
    REQUIRE(hits.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(hits[i].algebra.series == std::get<0>(want[i]));
        CHECK(hits[i].algebra.rank == std::get<1>(want[i]));
        CHECK(hits[i].level == std::get<2>(want[i]));
    }
}
} // namespace

TEST_CASE("search at 23/2, small window") {
    expect_hits(search_by_central_charge(Rat(23, 2), 4, -30, 30),
                {{Series::B, 2, -23}, {Series::C, 2, -23}});
}

TEST_CASE("search at 23/2, wide window") {
    expect_hits(search_by_central_charge(Rat(23, 2), 24, -100, 100),
                {{Series::B, 2, -23}, {Series::B, 11, 1}, {Series::C, 2, -23}});
}

TEST_CASE("search at 45/2") {
    expect_hits(search_by_central_charge(Rat(45, 2), 24, -100, 100),
                {{Series::A, 3, -12},
                 {Series::A, 4, 75},
                 {Series::B, 3, -75},
                 {Series::B, 22, 1},
                 {Series::C, 3, -60},
                 {Series::D, 3, -12},
                 {Series::D, 5, 8}});
}

TEST_CASE("search at 0 keeps level zero") {
    expect_hits(search_by_central_charge(Rat(0), 2, -1, 1),
                {{Series::A, 1, 0},
                 {Series::A, 2, 0},
                 {Series::B, 2, 0},
                 {Series::C, 2, 0},
                 {Series::G2, 2, 0}});
}

TEST_CASE("search argument validation") {
    CHECK_THROWS_AS(search_by_central_charge(Rat(1), 0, -1, 1), DomainError);
    CHECK_THROWS_AS(search_by_central_charge(Rat(1), 4, 5, -5), DomainError);
    CHECK(search_by_central_charge(Rat(1, 7), 8, -20, 20).empty());
}

TEST_CASE("signature from L2") {
    CHECK(signature_from_L2({0, -1440}) == -224);
    CHECK(signature_from_L2({0, 45}) == 7);
    CHECK(signature_from_L2({3, 9}) == Rat(54, 45));
    CHECK(char_data_consistent({0, 45}));
    CHECK_FALSE(char_data_consistent({24, -1440}));
}

TEST_CASE("A-hat genus degree-two term") {
    CHECK(a_hat_2({0, -1440}) == 1);
    CHECK(a_hat_2({24, -1440}) == Rat(17, 10));
    CHECK(a_hat_2({24, -1440}, true) == Rat(11, 10));
    CHECK(a_hat_2({0, 576}) == a_hat_2({0, 576}, true)); // p1 = 0: conventions agree
}

TEST_CASE("solving p2 from a signature target") {
    CHECK(solve_p2_from_signature(-224, 0) == -1440);
    CHECK(solve_p2_from_signature(0, 0) == 0);
    CHECK(solve_p2_from_signature(7, 0) == 45);
    CHECK_THROWS_AS(solve_p2_from_signature(1, 0), DomainError);
    for (long long sigma : {-224, -16, 0, 7, 16}) {
        for (long long p1 : {-24, 0, 12, 24}) {
            long long num = 45 * sigma + p1 * p1;
            if (num % 7 != 0) continue;
            CAPTURE(sigma, p1);
            long long p2 = solve_p2_from_signature(sigma, p1);
            CHECK(signature_from_L2({p1, p2}) == sigma);
        }
    }
}
