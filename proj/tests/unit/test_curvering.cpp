#include "helpers.hpp"

#include "cuspidal/curvering.hpp"
#include "cuspidal/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cuspidal;

namespace {

CurvePoly P(const CoeffField& K, const std::string& s) { return parse_curve_poly(K, s); }

CurveIdeal reduce(const CoeffField& K, int n, const std::vector<std::string>& gens) {
    std::vector<CurvePoly> g;
    for (const auto& s : gens) g.push_back(P(K, s));
    return curve_reduce_pair(K, n, g);
}

CurvePoly x_pow(const CoeffField& K, std::size_t k) { return CurvePoly::monomial(K, k); }

// Generators d*p, d*q of I.
std::vector<CurvePoly> gens_of(const CurveIdeal& I) {
    std::vector<CurvePoly> g{I.content * I.p};
    if (!I.q.is_zero()) g.push_back(I.content * I.q);
    return g;
}

// x^e I inside I, tested by the independent span solver.
bool x_power_stabilizes(const CurveIdeal& I, std::size_t e) {
    const auto g = gens_of(I);
    int deg = 0;
    for (const auto& h : g) deg += static_cast<int>(h.degree());
    for (const auto& h : g)
        if (!oracle::in_ideal_span(I.field, I.n, g, h.shifted(e), 2 * deg + I.n + static_cast<int>(e)))
            return false;
    return true;
}

void check_invariants(const CurveIdeal& I) {
    CHECK(I.p.coeff(0) != 0);
    CHECK(I.nu % 2 == 0);
    CHECK(I.nu >= 0);
    CHECK(I.nu <= I.n - 1);
    for (int i = 0; i < I.nu; ++i) CHECK(I.q.coeff(i) == 0);
    if (I.nu < I.n - 1) {
        const Rat det = I.p.coeff(0) * I.q.coeff(I.nu + 1) - I.p.coeff(1) * I.q.coeff(I.nu);
        CHECK(I.field.reduce(det) != 0);
    }
    if (!I.q.is_zero()) CHECK(poly_gcd(I.p, I.q).degree() == 0);
}

}  // namespace

TEST_CASE("coefficient fields") {
    CHECK(CoeffField::parse("rational").is_rational());
    CHECK(CoeffField::parse("f7").characteristic() == 7);
    CHECK_THROWS_AS(CoeffField::parse("f6"), UsageError);
    CHECK_THROWS_AS(CoeffField::parse("reals"), UsageError);
    const CoeffField F5 = CoeffField::prime(5);
    CHECK(F5.reduce(Rat(-1)) == 4);
    CHECK(F5.reduce(make_rat(1, 2)) == 3);
    CHECK_THROWS_AS(F5.reduce(make_rat(1, 5)), UsageError);
}

TEST_CASE("polynomial grammar and ring membership") {
    const CoeffField Q = CoeffField::rational();
    CHECK(P(Q, "1 + 2*x - x^3") == P(Q, "[1, 2, 0, -1]"));
    CHECK(P(Q, "1/2*x^2").coeff(2) == make_rat(1, 2));
    CHECK(in_curve_ring(P(Q, "1 + x^2 + x^5"), 5));
    CHECK_FALSE(in_curve_ring(P(Q, "x^3"), 5));
    CHECK(in_curve_ring(P(Q, "x^7"), 5));
    CHECK_THROWS_AS(P(Q, "1 + y"), UsageError);
    CHECK_THROWS_AS(reduce(Q, 5, {"x^3"}), UsageError);
    CHECK_THROWS_AS(reduce(Q, 4, {"1"}), UsageError);
    CHECK_THROWS_AS(reduce(Q, 5, {"0"}), ZeroIdealError);
}

TEST_CASE("reduced pairs of the listed ideals") {
    for (const CoeffField& K : {CoeffField::rational(), CoeffField::prime(5)}) {
        const CurveIdeal a = reduce(K, 3, {"x^2", "x^3"});
        CHECK(a.content == x_pow(K, 2));
        CHECK(a.p == x_pow(K, 0));
        CHECK(a.q == x_pow(K, 1));
        CHECK(a.nu == 0);
        CHECK(a.q.coeff(1) * a.p.coeff(0) - a.q.coeff(0) * a.p.coeff(1) == 1);

        const CurveIdeal b = reduce(K, 5, {"x^2", "x^5"});
        CHECK(b.content == x_pow(K, 2));
        CHECK(b.p == x_pow(K, 0));
        CHECK(b.q == x_pow(K, 3));
        CHECK(b.nu == 2);

        for (int n : {3, 5, 7, 9}) {
            const CurveIdeal u = reduce(K, n, {"1"});
            CHECK(u.content == x_pow(K, 0));
            CHECK(u.p == x_pow(K, 0));
            CHECK(u.q.is_zero());
            CHECK(u.nu == n - 1);
        }
    }
}

TEST_CASE("Fitting ideals and multiplier rings of the listed ideals") {
    const CoeffField Q = CoeffField::rational();
    const CurveIdeal a = reduce(Q, 3, {"x^2", "x^3"});
    CHECK(curve_fitt1(a).even_exp == 2);
    CHECK(curve_fitt1(a).full_exp == 2);
    CHECK(conductor_h_solver(a, 6).min_valuation == 2);
    CHECK(curve_multiplier_ring(a) == 0);
    CHECK(x_power_stabilizes(a, 1));

    const CurveIdeal b = reduce(Q, 5, {"x^2", "x^5"});
    CHECK(curve_fitt1(b).even_exp == 2);
    CHECK(curve_fitt1(b).full_exp == 4);
    CHECK(conductor_h_solver(b, 8).min_valuation == 2);
    CHECK(curve_multiplier_ring(b) == 2);
    CHECK_FALSE(x_power_stabilizes(b, 1));
    CHECK(x_power_stabilizes(b, 3));

    for (int n : {3, 5, 7}) {
        const CurveIdeal u = reduce(Q, n, {"1"});
        CHECK(curve_fitt1(u).even_exp == 0);
        CHECK(curve_fitt1(u).full_exp == n - 1);
        CHECK(curve_multiplier_ring(u) == n - 1);
        const HSolution h = conductor_h_solver(u, 2 * n);
        CHECK(h.min_valuation == 0);
        for (const auto& v : h.basis) CHECK(in_curve_ring(v, n));
    }
    CHECK_THROWS_AS(conductor_h_solver(b, 3), UsageError);
}

TEST_CASE("unit group orders") {
    const CurveIdeal a = reduce(CoeffField::prime(5), 3, {"x^2", "x^3"});
    CHECK(curve_unit_group_order(a) == 4);
    CHECK(oracle::truncated_unit_count(5, 1) == 4);

    const CurveIdeal b = reduce(CoeffField::prime(7), 5, {"x^2", "x^5"});
    CHECK(curve_unit_group_order(b) == 6);
    CHECK(oracle::truncated_unit_count(7, 1) == 6);

    const CurveIdeal c = reduce(CoeffField::prime(3), 7, {"x^4", "x^7"});
    CHECK(c.nu == 2);
    CHECK(curve_unit_group_order(c) == 3 * 2);
    CHECK(oracle::truncated_unit_count(3, 2) == 6);

    CHECK(curve_unit_group_order(reduce(CoeffField::prime(5), 7, {"1"})) == 1);
    CHECK(curve_unit_group_order(reduce(CoeffField::rational(), 7, {"1"})) == 1);
    CHECK_THROWS_AS(curve_unit_group_order(reduce(CoeffField::rational(), 5, {"x^2", "x^5"})), UsageError);
}

TEST_CASE("conductor readings on the listed ideals") {
    const CoeffField Q = CoeffField::rational();
    const ConductorReadings r = conductor_readings(reduce(Q, 5, {"x^2", "x^5"}));
    CHECK(r.fitt_equals_r_colon_rho);
    // Fitt_1 = K[x^2]x^2 + K[x]x^4 differs from rho(I) = K[x^2] + K[x]x^2.
    CHECK_FALSE(r.fitt_equals_rho_colon_r);
    const ConductorReadings u = conductor_readings(reduce(Q, 5, {"1"}));
    CHECK(u.fitt_equals_r_colon_rho);
    CHECK(u.fitt_equals_rho_colon_r);
}

TEST_CASE("random ideals") {
    auto g = testing::rng(9);
    for (const CoeffField& K : {CoeffField::rational(), CoeffField::prime(5), CoeffField::prime(3)}) {
        for (int n : {3, 5, 7}) {
            for (int i = 0; i < 15; ++i) {
                const auto gens = oracle::random_curve_gens(K, n, g);
                const CurveIdeal I = curve_reduce_pair(K, n, gens);
                check_invariants(I);
                for (const auto& h : gens) CHECK(curve_contains_by_solve(I, h));
                for (const auto& h : gens_of(I)) CHECK(I.contains(h));

                const CurveFitt1 F = curve_fitt1(I);
                CHECK(F.even_exp == n - I.nu - 1);
                CHECK(F.full_exp == n - 1);
                CHECK(conductor_h_solver(I, 2 * n).min_valuation == F.even_exp);
                CHECK(curve_multiplier_ring(I) == I.nu);
                CHECK(conductor_readings(I).fitt_equals_r_colon_rho);

                CHECK(x_power_stabilizes(I, I.nu + 1));
                if (I.nu >= 2) CHECK_FALSE(x_power_stabilizes(I, I.nu - 1));

                if (!K.is_rational()) {
                    const int f = I.nu + 1;
                    const Int expected = f == n ? Int(1) : oracle::truncated_unit_count(K.characteristic(), (n - f) / 2);
                    CHECK(curve_unit_group_order(I) == expected);
                }
            }
        }
    }
}
