#include "helpers.hpp"

#include "cuspidal/errors.hpp"
#include "cuspidal/quadideal.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cuspidal;
using testing::el;
using testing::ideal;

namespace {

bool same_as_oracle(const QIdeal& I, const std::vector<QuadElt>& gens) {
    const auto o = oracle::standard_basis(I.order(), gens);
    return o.a == I.a() && o.d == I.d() && o.e == I.e();
}

std::vector<Order> small_orders() {
    std::vector<Order> out;
    for (std::int64_t m : testing::test_fields())
        for (std::int64_t f : {1, 2, 3, 4, 6})
            out.emplace_back(FieldDesc(m), f);
    return out;
}

}  // namespace

TEST_CASE("standard basis examples") {
    const Order R(FieldDesc(-3), 2);
    const QIdeal U = ideal(R, {"1"});
    CHECK(U.a() == 1);
    CHECK(U.d() == 0);
    CHECK(U.e() == 1);

    const std::vector<QuadElt> g{el(R.field(), "2"), el(R.field(), "1+s")};
    const QIdeal I = QIdeal::from_generators(R, g);
    CHECK(el(R.field(), "1+s") == R.generator());
    CHECK(I.a() == 2);
    CHECK(I.d() == 0);
    CHECK(I.e() == 1);
    CHECK(same_as_oracle(I, g));

    const QIdeal J = ideal(R, {"4", "2+2*s"});
    CHECK(J.a() == 4);
    CHECK(J.d() == 0);
    CHECK(J.e() == 2);
    CHECK_FALSE(J.is_primitive());
}

TEST_CASE("generator validation") {
    const Order R(FieldDesc(-1), 3);
    CHECK_THROWS_AS(ideal(R, {"0"}), ZeroIdealError);
    CHECK_THROWS_AS(ideal(R, {"0", "0"}), ZeroIdealError);
    CHECK_THROWS_AS(ideal(R, {"1+w"}), UsageError);
    CHECK_THROWS_AS(QIdeal::from_standard_basis(R, 4, 2, 1), UsageError);
}

TEST_CASE("d is normalized into [-a/2, a/2)") {
    const Order R(FieldDesc(-1), 1);
    const QIdeal I = ideal(R, {"5", "3+w"});
    CHECK(I.a() == 5);
    CHECK(I.d() == -2);
    const QIdeal J = ideal(R, {"2", "1+w"});
    CHECK(J.d() == -1);
}

TEST_CASE("ideal norm") {
    const Order R(FieldDesc(-3), 2);
    CHECK(ideal_norm(QIdeal::unit(R)) == 1);
    const QIdeal I = ideal(R, {"2", "1+s"});
    CHECK(ideal_norm(I) == 2);
    CHECK(R.lattice().index_of(I.lattice()) == 2);
    for (std::int64_t m : {-5, 2, -3})
        for (std::int64_t f : {1, 3}) CHECK(ideal_norm(ideal(Order(FieldDesc(m), f), {"2"})) == 4);
}

TEST_CASE("ideal products") {
    const Order R(FieldDesc(-3), 2);
    const QIdeal I = ideal(R, {"2", "1+s"});
    CHECK(ideal_mul(I, QIdeal::unit(R)) == I);
    const QIdeal II = ideal_mul(I, I);
    // I is not invertible, so N(I^2) = [R : 2I] = 8 rather than N(I)^2.
    CHECK(ideal_norm(II) == 8);
    CHECK(R.lattice().index_of(II.lattice()) == 8);
    CHECK(II == ideal(R, {"4", "2+2*s"}));
    CHECK(II == QIdeal::from_lattice(R, I.lattice().scaled(QuadRat(QuadElt(R.field(), 2)))));
    CHECK(ideal_mul(ideal(R, {"3"}), ideal(R, {"5"})) == ideal(R, {"15"}));
}

TEST_CASE("ideal inverses") {
    const Order R(FieldDesc(-3), 2);
    const FractionalIdeal Ri = ideal_inverse(QIdeal::unit(R));
    CHECK(Ri.lattice() == R.lattice());

    const QIdeal I = ideal(R, {"2", "1+s"});
    const FractionalIdeal inv = ideal_inverse(I);
    const FieldDesc& F = R.field();
    const std::vector<QuadRat> expected{QuadRat(QuadElt(F, 2), 2), QuadRat(el(F, "1-s"), 2)};
    CHECK(inv.lattice() == Lattice::span(F, expected));
    for (const auto& x : inv.lattice().basis())
        for (const auto& y : I.lattice().basis()) CHECK(R.lattice().contains(x * y));

    CHECK(ideal_inverse(ideal(R, {"3"})).lattice() ==
          R.lattice().scaled(QuadRat(QuadElt(F, 1), 3)));
}

TEST_CASE("multiplier conductor examples") {
    const Order R(FieldDesc(-3), 2);
    CHECK(multiplier_conductor(QIdeal::unit(R)) == 2);
    const QIdeal I = ideal(R, {"2", "1+s"});
    CHECK(multiplier_conductor(I) == 1);
    CHECK(oracle::multiplier_conductor_by_membership(I) == 1);
    CHECK(multiplier_conductor(ideal(R, {"7+s"})) == 2);
    CHECK(multiplier_conductor(ideal(Order(FieldDesc(5), 6), {"3+12*w"})) == 6);
}

TEST_CASE("content of the norm form, not gcd(a, d, ef), gives the multiplier ring") {
    // I = (4, -2 + 4w) in Z + 4Z[i]: gcd(a, d, ef) = 2 while q_I = 4x^2 - 4xy + 5y^2
    // is primitive, so I is invertible.
    const Order R(FieldDesc(-1), 4);
    const QIdeal I = ideal(R, {"4", "-2+4*w"});
    const MultiplierRing mr = multiplier_ring(I);
    CHECK(mr.gcd_adef == 2);
    CHECK(mr.content == 1);
    CHECK(mr.f_prime == 4);
    CHECK(oracle::multiplier_conductor_by_membership(I) == 4);
    const FormQ q = norm_form(I);
    CHECK(q.A == 4);
    CHECK(q.B == -4);
    CHECK(q.C == 5);
}

TEST_CASE("Fitting ideal examples") {
    const Order R(FieldDesc(-3), 2);
    CHECK(fitt1(QIdeal::unit(R)) == QIdeal::unit(R));
    CHECK(fitt1(ideal(R, {"5+s"})) == QIdeal::unit(R));
    const QIdeal I = ideal(R, {"2", "1+s"});
    CHECK(fitt1(I) == I);
    const Order O(FieldDesc(-7), 1);
    CHECK(fitt1(ideal(O, {"2", "w"})) == QIdeal::unit(O));
}

TEST_CASE("class comparison") {
    const Order R(FieldDesc(-5), 1);
    const QIdeal P = ideal(R, {"2", "1+s"});
    CHECK(is_same_class(P, P));
    CHECK_FALSE(is_same_class(P, QIdeal::unit(R)));
    CHECK(is_same_class(P, ideal_mul(P, ideal(R, {"3"}))));
    CHECK(is_same_class(ideal_mul(P, P), QIdeal::unit(R)));

    // Different multiplier rings are never in one class.
    const Order S(FieldDesc(-3), 2);
    CHECK_FALSE(is_same_class(ideal(S, {"2", "1+s"}), QIdeal::unit(S)));

    const Order T(FieldDesc(10), 1);
    const QIdeal Q = ideal(T, {"2", "w"});
    CHECK_FALSE(is_same_class(Q, QIdeal::unit(T)));
    CHECK(is_same_class(ideal_mul(Q, Q), QIdeal::unit(T)));
}

TEST_CASE("ideal class enumeration") {
    CHECK(enumerate_ideal_classes(Order(FieldDesc(-1), 1)).size() == 1);
    const auto c5 = enumerate_ideal_classes(Order(FieldDesc(-5), 1));
    REQUIRE(c5.size() == 2);
    CHECK(c5[0] == QIdeal::unit(c5[0].order()));
    CHECK(oracle::reduced_form_count(-20) == 2);

    const Order R(FieldDesc(-3), 2);
    const auto c = enumerate_ideal_classes(R);
    CHECK(c.size() == 2);
    int non_invertible = 0;
    for (const auto& I : c) non_invertible += multiplier_conductor(I) != 2;
    CHECK(non_invertible == 1);

    SearchConfig tiny;
    tiny.disc_bound = 10;
    CHECK_THROWS_AS(enumerate_ideal_classes(Order(FieldDesc(-5), 1), tiny), Inconclusive);
}

TEST_CASE("random ideals: standard basis and multiplier ring properties") {
    auto g = testing::rng(2);
    for (const Order& R : small_orders()) {
        for (int i = 0; i < 12; ++i) {
            const QIdeal I = oracle::random_ideal(R, g);
            const auto p = I.standard_pair();
            const std::vector<QuadElt> sp{p[0], p[1]};
            CHECK(QIdeal::from_generators(R, sp) == I);
            CHECK(same_as_oracle(I, sp));
            CHECK(norm(p[1]) % I.a() == 0);
            CHECK(2 * I.d() >= -I.a());
            CHECK(2 * I.d() < I.a());
            CHECK(R.lattice().index_of(I.lattice()) == I.norm());

            const std::int64_t fp = multiplier_conductor(I);
            CHECK(R.f() % fp == 0);
            CHECK(fp == oracle::multiplier_conductor_by_membership(I));
            const FormQ q = norm_form(I);
            CHECK(gcd(gcd(q.A, q.B), q.C) == I.e() * R.f() / fp);

            const QIdeal F = fitt1(I);
            CHECK(F.lattice() == I.lattice() * ideal_inverse(I).lattice());
            CHECK(F.lattice() == colon(R.lattice(), R.overorder(fp).lattice()));
            CHECK(R.lattice().index_of(F.lattice()) == R.f() / fp);
        }
    }
}

TEST_CASE("norms multiply on invertible ideals") {
    auto g = testing::rng(3);
    for (const Order& R : small_orders()) {
        int seen = 0;
        for (int i = 0; i < 60 && seen < 6; ++i) {
            const QIdeal I = oracle::random_ideal(R, g), J = oracle::random_ideal(R, g);
            if (multiplier_conductor(I) != R.f() || multiplier_conductor(J) != R.f()) continue;
            ++seen;
            CHECK(ideal_norm(ideal_mul(I, J)) == ideal_norm(I) * ideal_norm(J));
        }
    }
}
