#include "helpers.hpp"

#include "cuspidal/errors.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/units.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cuspidal;
using testing::el;
using testing::ideal;

namespace {

bool maps(const GenPair& m, const Mat2& B, const GenPair& m2) {
    return m.g1() * B.a11 + m.g2() * B.a21 == m2.g1() && m.g1() * B.a12 + m.g2() * B.a22 == m2.g2();
}

bool in_order(const Order& R, const Mat2& B) {
    return R.contains(B.a11) && R.contains(B.a12) && R.contains(B.a21) && R.contains(B.a22);
}

QuadElt det_by_laplace(const Mat2& B) { return oracle::det_laplace({{B.a11, B.a12}, {B.a21, B.a22}}); }

Int phi(const Int& n) { return Int(static_cast<long>(unit_residues(n).size())); }

std::set<Int> residue_set(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("determinant class of a pair against itself") {
    const Order R(FieldDesc(-3), 4);
    const QIdeal I = ideal(R, {"4", "4*w"});
    const GenPair m = GenPair::standard(I);
    const DetClass d = det_pair(m, m);
    CHECK(d.modulus == 4);
    CHECK(d.value == 1);
    CHECK(d.is_one());
    CHECK(is_sl2_equivalent(m, m));
}

TEST_CASE("the swap (2, 1+sqrt(-3)) -> (1+sqrt(-3), 2)") {
    const Order R(FieldDesc(-3), 2);
    const FieldDesc& F = R.field();
    const QIdeal I = ideal(R, {"2", "1+s"});
    const GenPair m(I, el(F, "2"), el(F, "1+s"));
    const GenPair m2(I, el(F, "1+s"), el(F, "2"));
    const DetClass d = det_pair(m, m2);
    CHECK(d.modulus == 2);
    CHECK(d.is_one());
    CHECK(oracle::det_classes_by_search(m, m2, 2, 2) == std::vector<Int>{1});
    CHECK(is_sl2_equivalent(m, m2));

    const Mat2 B = sl2_witness(m, m2);
    CHECK(in_order(R, B));
    CHECK(det_by_laplace(B) == QuadElt(F, 1));
    CHECK(maps(m, B, m2));
}

TEST_CASE("a non-invertible ideal with residue class 3 mod 4") {
    // I = (4, 4w) in Z + 4Z[w], w = (1 + sqrt(-3))/2, has multiplier ring O_1.
    const Order R(FieldDesc(-3), 4);
    const FieldDesc& F = R.field();
    const QIdeal I = ideal(R, {"4", "4*w"});
    REQUIRE(multiplier_conductor(I) == 1);
    const GenPair m(I, el(F, "4"), el(F, "4*w"));
    const GenPair m2(I, el(F, "4"), el(F, "12*w"));
    const DetClass d = det_pair(m, m2);
    CHECK(d.modulus == 4);
    CHECK(d.value == 3);
    CHECK_FALSE(is_sl2_equivalent(m, m2));
    CHECK(oracle::det_classes_by_search(m, m2, 4, 2) == std::vector<Int>{3});
    CHECK_THROWS_AS(sl2_witness(m, m2), UsageError);

    const GenPair p = pair_with_det(I, 3);
    CHECK(det_pair(GenPair::standard(I), p).value == 3);
}

TEST_CASE("pairs of different ideals or non-generating pairs are rejected") {
    const Order R(FieldDesc(-1), 2);
    const FieldDesc& F = R.field();
    const QIdeal I = ideal(R, {"2", "2*w"});
    CHECK_THROWS_AS(GenPair(I, el(F, "2"), el(F, "4")), UsageError);
    const GenPair a = GenPair::standard(I);
    const GenPair b = GenPair::standard(QIdeal::unit(R));
    CHECK_THROWS_AS(det_pair(a, b), UsageError);
}

TEST_CASE("witnesses for (m, m) and (m, mE)") {
    const Order R(FieldDesc(5), 3);
    const FieldDesc& F = R.field();
    const QIdeal I = ideal(R, {"6", "3+3*w"});
    const GenPair m = GenPair::standard(I);
    const Mat2 Id = sl2_witness(m, m);
    CHECK(Id.a11 == QuadElt(F, 1));
    CHECK(Id.a12.is_zero());
    CHECK(Id.a21.is_zero());
    CHECK(Id.a22 == QuadElt(F, 1));

    const Mat2 E{QuadElt(F, 1), el(F, "2+3*w"), QuadElt(F, 0), QuadElt(F, 1)};
    const GenPair mE = act(m, E);
    const Mat2 B = sl2_witness(m, mE);
    CHECK(in_order(R, B));
    CHECK(B.det() == QuadElt(F, 1));
    CHECK(maps(m, B, mE));
}

TEST_CASE("SL_2 invariance, cocycle and witnesses on random pairs") {
    auto g = testing::rng(4);
    for (std::int64_t mm : {-1, -3, -5, 2, 5}) {
        for (std::int64_t f : {2, 3, 4, 6}) {
            const Order R(FieldDesc(mm), f);
            for (int i = 0; i < 6; ++i) {
                const QIdeal I = oracle::random_ideal(R, g);
                const GenPair m = oracle::random_pair(I, g);
                const GenPair m1 = oracle::random_pair(I, g);
                const GenPair m2 = oracle::random_pair(I, g);
                const Mat2 s = oracle::random_sl2(R, g);
                REQUIRE(det_by_laplace(s) == QuadElt(R.field(), 1));
                const GenPair ms = act(m, s);
                CHECK(det_pair(m, ms).is_one());

                const DetClass a = det_pair(m, m1), b = det_pair(m1, m2), c = det_pair(m, m2);
                CHECK(c.value == mod(a.value * b.value, c.modulus));

                const Mat2 B = sl2_witness(m, ms);
                CHECK(in_order(R, B));
                CHECK(det_by_laplace(B) == QuadElt(R.field(), 1));
                CHECK(maps(m, B, ms));

                const Mat2 A = transition_matrix(m, m1);
                CHECK(in_order(R, A));
                CHECK(maps(m, A, m1));
                CHECK(residue_mod_fitt1(I, A.det()) % c.modulus == a.value % c.modulus);
            }
        }
    }
}

TEST_CASE("every unit class is attained") {
    auto g = testing::rng(5);
    for (std::int64_t mm : {-1, -3, 2, 3}) {
        for (std::int64_t f : {3, 4, 5, 8}) {
            const Order R(FieldDesc(mm), f);
            for (int i = 0; i < 4; ++i) {
                const QIdeal I = oracle::random_ideal(R, g);
                const GenPair s = GenPair::standard(I);
                const Int n0 = R.f() / multiplier_conductor(I);
                for (const Int& u : unit_residues(n0)) {
                    const GenPair p = pair_with_det(I, u);
                    CHECK(QIdeal::from_generators(R, {p.g1(), p.g2()}) == I);
                    CHECK(det_pair(s, p).value == u);
                }
            }
        }
    }
}

TEST_CASE("small searches agree with det_pair") {
    auto g = testing::rng(6);
    for (std::int64_t mm : {-1, -3, 2}) {
        const Order R(FieldDesc(mm), 3);
        for (int i = 0; i < 5; ++i) {
            const QIdeal I = oracle::random_ideal(R, g, 4);
            const Int n0 = R.f() / multiplier_conductor(I);
            const GenPair s = GenPair::standard(I);
            for (const Int& u : unit_residues(n0)) {
                const GenPair p = pair_with_det(I, u);
                const auto found = oracle::det_classes_by_search(s, p, n0, 1);
                for (const Int& r : found) CHECK(r == u);
            }
        }
    }
}

TEST_CASE("epsilon subgroup") {
    for (std::int64_t mm : {-1, -2, -3, -7}) {
        const Order R(FieldDesc(mm), 5);
        const QIdeal I = ideal(R, {"5", "5*w"});
        CHECK(epsilon_subgroup(I) == std::vector<Int>{1});
    }
    const Order R2(FieldDesc(2), 5);
    const QIdeal I2 = ideal(R2, {"5", "5*w"});
    REQUIRE(multiplier_conductor(I2) == 1);
    CHECK(epsilon_subgroup(I2) == std::vector<Int>{1, 4});
    const auto u = oracle::pell_unit(Order(FieldDesc(2), 1), 10);
    REQUIRE(u.has_value());
    CHECK(norm(*u) == -1);

    const Order R3(FieldDesc(3), 7);
    CHECK(epsilon_subgroup(ideal(R3, {"7", "7*w"})) == std::vector<Int>{1});
    CHECK(norm(*oracle::pell_unit(Order(FieldDesc(3), 1), 10)) == 1);
}

TEST_CASE("orbit counts") {
    const Order R(FieldDesc(2), 5);
    CHECK(orbit_count_sl2_mod_units(QIdeal::unit(R)) == 1);
    CHECK(orbit_count_sl2_mod_units(ideal(R, {"5", "5*w"})) == 2);
    const Order S(FieldDesc(-1), 5);
    const QIdeal J = ideal(S, {"5", "5*w"});
    CHECK(orbit_count_sl2_mod_units(J) == 4);

    // Units of Z + 5Z[i] are +-1, with residues {1, 4} mod 5.
    std::set<Int> image;
    for (const auto& u : oracle::units_in_box(S, 5)) image.insert(residue_mod_fitt1(J, u));
    CHECK(image == std::set<Int>{1, 4});
    CHECK(orbit_count_gl2(J) == 2);
    CHECK(orbit_count_gl2(ideal(Order(FieldDesc(-1), 2), {"2", "2*w"})) == 1);
}

TEST_CASE("orbit count identities on random ideals") {
    auto g = testing::rng(7);
    for (std::int64_t mm : testing::test_fields()) {
        for (std::int64_t f : {2, 3, 5, 6, 8}) {
            const Order R(FieldDesc(mm), f);
            for (int i = 0; i < 3; ++i) {
                const QIdeal I = oracle::random_ideal(R, g);
                const Int n0 = R.f() / multiplier_conductor(I);
                const auto eps = epsilon_subgroup(I);
                CHECK(eps.size() <= 2);
                CHECK(orbit_count_sl2_mod_units(I) * Int(static_cast<long>(eps.size())) == phi(n0));

                std::set<Int> image;
                for (const auto& u : oracle::units_in_box(R, 40)) image.insert(residue_mod_fitt1(I, u));
                const auto info = UnitCache::global().get(R);
                if (info.real) {
                    // Powers of the fundamental unit beyond the box.
                    QuadElt p = info.fundamental;
                    for (int k = 0; k < 2 * to_i64(n0) + 2; ++k) {
                        image.insert(residue_mod_fitt1(I, p));
                        image.insert(residue_mod_fitt1(I, -p));
                        p = p * info.fundamental;
                    }
                }
                CHECK(orbit_count_gl2(I) * Int(static_cast<long>(image.size())) == phi(n0));
            }
        }
    }
}

TEST_CASE("vector reduction examples") {
    const Order R(FieldDesc(-3), 2);
    const FieldDesc& F = R.field();
    const std::vector<QuadElt> v{el(F, "2"), el(F, "1+s"), el(F, "2+2*s")};
    const QIdeal I = QIdeal::from_generators(R, v);
    const VectorReduction r = reduce_vector(GenVec(I, v));
    CHECK(oracle::det_laplace(r.sigma) == 1);
    const auto img = act(v, r.sigma);
    CHECK(img[0] == r.pair.g1());
    CHECK(img[1] == r.pair.g2());
    CHECK(img[2].is_zero());
    CHECK(QIdeal::from_generators(R, {r.pair.g1(), r.pair.g2()}) == I);

    const std::vector<QuadElt> w{el(F, "2"), el(F, "1+s"), QuadElt(F, 0)};
    const VectorReduction r0 = reduce_vector(GenVec(I, w));
    CHECK(act(w, r0.sigma)[2].is_zero());

    const std::vector<QuadElt> c{QuadElt(F, 3), QuadElt(F, 0), QuadElt(F, 0), QuadElt(F, 0)};
    const QIdeal C = QIdeal::from_generators(R, c);
    const VectorReduction rc = reduce_vector(GenVec(C, c));
    CHECK(oracle::det_laplace(rc.sigma) == 1);
    const auto ic = act(c, rc.sigma);
    CHECK(((ic[0] == c[0] && ic[1].is_zero()) || (ic[1] == c[0] && ic[0].is_zero()) ||
           (ic[0] == -c[0] && ic[1].is_zero())));
    for (std::size_t i = 0; i < rc.sigma.rows(); ++i)
        for (std::size_t j = 0; j < rc.sigma.cols(); ++j) CHECK(abs(rc.sigma(i, j)) <= 1);

    CHECK_THROWS_AS(reduce_vector(GenVec(I, {v[0], v[1]})), UsageError);
}

TEST_CASE("vector reduction on random vectors") {
    auto g = testing::rng(8);
    for (std::int64_t mm : {-1, -3, 2, 5, -15}) {
        for (std::int64_t f : {1, 2, 4}) {
            const Order R(FieldDesc(mm), f);
            for (std::size_t len : {3, 4, 5}) {
                for (int i = 0; i < 4; ++i) {
                    std::vector<QuadElt> v;
                    for (std::size_t k = 0; k < len; ++k) v.push_back(oracle::random_element(R, g, 9));
                    if (std::all_of(v.begin(), v.end(), [](const QuadElt& x) { return x.is_zero(); })) continue;
                    const QIdeal I = QIdeal::from_generators(R, v);
                    const VectorReduction r = reduce_vector(GenVec(I, v));
                    CHECK(oracle::det_laplace(r.sigma) == 1);
                    const auto img = act(v, r.sigma);
                    for (std::size_t k = 2; k < len; ++k) CHECK(img[k].is_zero());
                    CHECK(QIdeal::from_generators(R, {r.pair.g1(), r.pair.g2()}) == I);
                }
            }
        }
    }
}
