#include "helpers.hpp"

#include "cuspidal/classnum.hpp"
#include "cuspidal/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cuspidal;

TEST_CASE("class numbers of maximal orders") {
    CHECK(class_number_maximal(FieldDesc(-1)).h == 1);
    CHECK(class_number_maximal(FieldDesc(-5)).h == 2);
    CHECK(class_number_maximal(FieldDesc(2)).h == 1);
    CHECK(class_number_maximal(FieldDesc(10)).h == 2);
    CHECK(class_number_maximal(FieldDesc(-5)).method == PicMethod::Forms);
    CHECK(class_number_maximal(FieldDesc(2)).method == PicMethod::BruteForce);
    CHECK(oracle::reduced_form_count(-20) == 2);
    CHECK(count_reduced_forms(-20) == 2);
    for (std::int64_t m : {-1, -2, -3, -5, -6, -14, -23, -47, -71})
        CHECK(class_number_maximal(FieldDesc(m)).h == oracle::reduced_form_count(FieldDesc(m).disc()));
}

TEST_CASE("Picard group sizes") {
    CHECK(picard_order(Order(FieldDesc(-5), 1)).h == 2);
    CHECK(picard_order(Order(FieldDesc(-1), 2)).h == 1);
    CHECK(picard_order(Order(FieldDesc(-3), 2)).h == 1);
    CHECK(oracle::reduced_form_count(-12) == 1);
    CHECK(brute_force_pic(Order(FieldDesc(-1), 1)).h == 1);
    CHECK(brute_force_pic(Order(FieldDesc(-3), 2)).h == 1);
    CHECK(brute_force_pic(Order(FieldDesc(-5), 1)).h == 2);
}

TEST_CASE("conductor formula against reduced forms of disc f^2 d_K") {
    for (std::int64_t m : {-1, -2, -3, -5, -7, -11, -15})
        for (std::int64_t f = 1; f <= 12; ++f) {
            const Order R(FieldDesc(m), f);
            CHECK(picard_order(R).h == oracle::reduced_form_count(to_i64(R.disc())));
        }
}

TEST_CASE("conductor formula against brute force") {
    for (std::int64_t m : {-1, -3, -5, 2, 3, 5, 6, 7})
        for (std::int64_t f = 1; f <= 6; ++f) {
            const Order R(FieldDesc(m), f);
            CHECK(picard_order(R).h == brute_force_pic(R).h);
        }
}

TEST_CASE("|Pic(O)| divides |Pic(O_f)|") {
    for (std::int64_t m : {-5, -15, -23, 10, 15})
        for (std::int64_t f = 1; f <= 8; ++f) {
            const Int h = picard_order(Order(FieldDesc(m), f)).h;
            CHECK(divides(picard_order(Order(FieldDesc(m), 1)).h, h));
        }
}

TEST_CASE("finite quotient unit counts") {
    for (std::int64_t m : {-1, -3, 2, 5, -7})
        for (std::int64_t f = 1; f <= 10; ++f) {
            const FieldDesc F(m);
            const Lattice O = Order(F, 1).lattice();
            const Lattice Of = Order(F, f).lattice();
            const Lattice fO = O.scaled(QuadRat(QuadElt(F, f)));
            CHECK(quotient_unit_count(O, fO) == oracle::quotient_units(O, fO));
            CHECK(quotient_unit_count(Of, fO) == oracle::quotient_units(Of, fO));
        }
}

TEST_CASE("quotient unit counts are multiplicative on coprime conductors") {
    for (std::int64_t m : {-1, -3, 2, 5}) {
        const FieldDesc F(m);
        const Lattice O = Order(F, 1).lattice();
        auto count = [&](std::int64_t f) { return quotient_unit_count(O, O.scaled(QuadRat(QuadElt(F, f)))); };
        for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{4, 5}, std::pair{5, 7}})
            CHECK(count(a * b) == count(a) * count(b));
    }
}

TEST_CASE("bounds raise Inconclusive") {
    SearchConfig tiny;
    tiny.disc_bound = 15;
    CHECK_THROWS_AS(class_number_maximal(FieldDesc(-5), tiny), Inconclusive);
    CHECK_THROWS_AS(brute_force_pic(Order(FieldDesc(-1), 3), tiny), Inconclusive);
}
