#include "helpers.hpp"

#include "cuspidal/units.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cuspidal;
using testing::el;

namespace {

// k >= 1 with x = +-u^k, or 0.
int power_of(const QuadElt& x, const QuadElt& u, int max_k) {
    QuadElt p = u;
    for (int k = 1; k <= max_k; ++k) {
        if (x == p || x == -p) return k;
        p = p * u;
    }
    return 0;
}

}  // namespace

TEST_CASE("fundamental units of maximal orders") {
    const Order R2(FieldDesc(2), 1), R3(FieldDesc(3), 1);
    const UnitInfo u2 = fundamental_unit(R2);
    CHECK(u2.real);
    CHECK(u2.fundamental == el(R2.field(), "1+s"));
    CHECK(u2.has_norm_minus_one);
    CHECK(*oracle::pell_unit(R2, 100) == u2.fundamental);

    const UnitInfo u3 = fundamental_unit(R3);
    CHECK(u3.fundamental == el(R3.field(), "2+s"));
    CHECK_FALSE(u3.has_norm_minus_one);
    CHECK(*oracle::pell_unit(R3, 100) == u3.fundamental);

    for (std::int64_t f : {1, 2, 7}) {
        const UnitInfo u = fundamental_unit(Order(FieldDesc(-7), f));
        CHECK_FALSE(u.real);
        CHECK(u.torsion_order == 2);
        CHECK_FALSE(u.has_norm_minus_one);
    }
}

TEST_CASE("torsion orders") {
    CHECK(fundamental_unit(Order(FieldDesc(-1), 1)).torsion_order == 4);
    CHECK(fundamental_unit(Order(FieldDesc(-3), 1)).torsion_order == 6);
    CHECK(fundamental_unit(Order(FieldDesc(-1), 2)).torsion_order == 2);
    CHECK(fundamental_unit(Order(FieldDesc(-3), 3)).torsion_order == 2);
    CHECK(oracle::units_in_box(Order(FieldDesc(-3), 1), 3).size() == 6);
}

TEST_CASE("unit indices") {
    const FieldDesc F1(-1), F5(5);
    CHECK(unit_index(Order(F1, 3), Order(F1, 3)) == 1);
    CHECK(unit_index(Order(F1, 2), Order(F1, 1)) == 2);
    CHECK(oracle::units_in_box(Order(F1, 1), 3).size() / oracle::units_in_box(Order(F1, 2), 3).size() == 2);

    // Power matching against an independent Pell search in O_2.
    const QuadElt e1 = fundamental_unit(Order(F5, 1)).fundamental;
    const auto e2 = oracle::pell_unit(Order(F5, 2), 100);
    REQUIRE(e2.has_value());
    const int k = power_of(*e2, e1, 20);
    CHECK(k > 0);
    CHECK(unit_index(Order(F5, 2), Order(F5, 1)) == k);
}

TEST_CASE("real units against Pell search") {
    for (std::int64_t m : {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21}) {
        for (std::int64_t f : {1, 2, 3}) {
            const Order R(FieldDesc(m), f);
            const UnitInfo u = fundamental_unit(R);
            CHECK(abs(norm(u.fundamental)) == 1);
            CHECK(real_embedding(u.fundamental) > 1);
            CHECK(R.contains(u.fundamental));
            const auto p = oracle::pell_unit(R, 2000);
            if (p) CHECK(*p == u.fundamental);
            CHECK(u.has_norm_minus_one == (norm(u.fundamental) == -1));
        }
    }
}

TEST_CASE("every unit in a box is a signed power of the fundamental unit") {
    for (std::int64_t m : {2, 3, 5, 6, 7, 13}) {
        for (std::int64_t f : {1, 2}) {
            const Order R(FieldDesc(m), f);
            const QuadElt e = fundamental_unit(R).fundamental;
            const QuadElt ei = conjugate(e) * Int(norm(e));
            for (const QuadElt& x : oracle::units_in_box(R, 50)) {
                if (x == QuadElt(R.field(), 1) || x == QuadElt(R.field(), -1)) continue;
                CHECK((power_of(x, e, 60) > 0 || power_of(x, ei, 60) > 0));
            }
        }
    }
}

TEST_CASE("norm -1 units descend to the maximal order") {
    for (std::int64_t m : {2, 5, 10, 13, 17, 29, 3, 7}) {
        const bool top = fundamental_unit(Order(FieldDesc(m), 1)).has_norm_minus_one;
        for (std::int64_t f : {2, 3, 4, 5, 6})
            if (fundamental_unit(Order(FieldDesc(m), f)).has_norm_minus_one) CHECK(top);
    }
}

TEST_CASE("cache returns the same data") {
    const Order R(FieldDesc(13), 3);
    const UnitInfo a = UnitCache::global().get(R);
    const UnitInfo b = UnitCache::global().get(R);
    CHECK(a.fundamental == b.fundamental);
    CHECK(a.fundamental == fundamental_unit(R).fundamental);
}
