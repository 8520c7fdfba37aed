#include "cuspidal/classnum.hpp"

#include "cuspidal/errors.hpp"
#include "cuspidal/quadideal.hpp"
#include "cuspidal/units.hpp"

namespace cuspidal {

namespace {

void check_bound(const Int& disc, const SearchConfig& cfg) {
    const Int D = disc < 0 ? Int(-disc) : disc;
    if (D > cfg.disc_bound)
        throw Inconclusive("|disc| = " + D.get_str() + " exceeds the configured bound " +
                           cfg.disc_bound.get_str());
}

}  // namespace

const char* to_string(PicMethod method) {
    switch (method) {
        case PicMethod::Forms: return "forms";
        case PicMethod::ConductorFormula: return "conductor-formula";
        case PicMethod::BruteForce: return "brute-force";
    }
    return "?";
}

Int count_reduced_forms(const Int& disc) {
    if (disc >= 0 || mod(disc, 4) > 1) throw UsageError("not a negative discriminant: " + disc.get_str());
    Int count = 0;
    // |B| <= A <= C and 3A^2 <= |disc|.
    for (Int A = 1; 3 * A * A <= -disc; ++A) {
        for (Int B = -A + 1; B <= A; ++B) {
            const Int num = B * B - disc;
            if (!divides(4 * A, num)) continue;
            const Int C = num / (4 * A);
            if (C < A) continue;
            if (A == C && B < 0) continue;
            if (gcd(gcd(A, B), C) != 1) continue;
            ++count;
        }
    }
    return count;
}

PicSize class_number_maximal(const FieldDesc& field, const SearchConfig& cfg) {
    const Order O(field, 1);
    const Int disc = O.disc();
    check_bound(disc, cfg);
    if (!field.is_real()) return PicSize{O, count_reduced_forms(disc), PicMethod::Forms};
    const auto reps = enumerate_ideal_classes(O, cfg);
    return PicSize{O, Int(static_cast<long>(reps.size())), PicMethod::BruteForce};
}

Int quotient_unit_count(const Lattice& S, const Lattice& J) {
    CUSPIDAL_CHECK(S.contains(J), "quotient of lattices needs J inside S");
    const auto s = S.basis();
    // In the basis (s1, s2) of S, J has a triangular basis with diagonal (alpha, gamma).
    const Rat alpha_r = make_rat(J.a() * S.den(), S.a() * J.den());
    const Rat gamma_r = make_rat(J.c() * S.den(), S.c() * J.den());
    CUSPIDAL_CHECK(alpha_r.get_den() == 1 && gamma_r.get_den() == 1, "J is not a sublattice of S");
    const Int alpha = alpha_r.get_num(), gamma = gamma_r.get_num();
    CUSPIDAL_CHECK(alpha * gamma == S.index_of(J), "coset count mismatch");
    const FieldDesc& field = S.field();
    Int count = 0;
    for (Int u = 0; u < alpha; ++u) {
        for (Int v = 0; v < gamma; ++v) {
            const QuadRat x = QuadRat(QuadElt(field, u)) * s[0] + QuadRat(QuadElt(field, v)) * s[1];
            if (x.is_zero()) {
                if (S == J) ++count;  // the zero ring has the unit 0 = 1
                continue;
            }
            if (S.scaled(x) + J == S) ++count;
        }
    }
    return count;
}

PicSize picard_order(const Order& order, const SearchConfig& cfg) {
    check_bound(order.disc(), cfg);
    const FieldDesc& field = order.field();
    const PicSize base = class_number_maximal(field, cfg);
    if (order.is_maximal()) return PicSize{order, base.h, base.method};
    if (order.f() > cfg.conductor_cap)
        throw Inconclusive("conductor " + std::to_string(order.f()) + " exceeds the cap " +
                           std::to_string(cfg.conductor_cap));
    const Order O(field, 1);
    const Int f = order.conductor();
    const Lattice fO = O.lattice().scaled(QuadRat(QuadElt(field, f)));
    const Int big = quotient_unit_count(O.lattice(), fO);
    const Int small = quotient_unit_count(order.lattice(), fO);
    const Int index = unit_index(order, O);
    const Int num = base.h * big;
    const Int den = index * small;
    CUSPIDAL_CHECK(divides(den, num), "conductor formula gave a non-integer");
    return PicSize{order, num / den, PicMethod::ConductorFormula};
}

PicSize brute_force_pic(const Order& order, const SearchConfig& cfg) {
    Int h = 0;
    for (const auto& I : enumerate_ideal_classes(order, cfg))
        if (multiplier_conductor(I) == order.f()) ++h;
    return PicSize{order, h, PicMethod::BruteForce};
}

}  // namespace cuspidal
