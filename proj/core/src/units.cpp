#include "cuspidal/units.hpp"

#include "cuspidal/errors.hpp"

#include <mutex>

namespace cuspidal {

namespace {

constexpr int kMaxContinuedFractionSteps = 1'000'000;

// floor((P + sqrt(D))/Q) for non-square D > 0.
Int surd_floor(const Int& P, const Int& D, const Int& Q) {
    Int s = isqrt(D);
    if (Q > 0) return fdiv(P + s, Q);
    return -(fdiv(P + s, -Q) + 1);
}

}  // namespace

QuadElt field_fundamental_unit(const FieldDesc& field) {
    if (!field.is_real()) throw UsageError("fundamental unit requested for an imaginary field");
    // Units x + y*w > 1 with y > 0 have x/y close to -conj(w), so they show up
    // among the convergents of -conj(w) = (P + sqrt(m))/Q.
    const Int D = Int(static_cast<long>(field.m()));
    Int P = field.omega_kind() == OmegaKind::Half ? -1 : 0;
    Int Q = field.omega_kind() == OmegaKind::Half ? 2 : 1;
    Int p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    for (int step = 0; step < kMaxContinuedFractionSteps; ++step) {
        Int a = surd_floor(P, D, Q);
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        QuadElt u(field, p, q);
        Int n = norm(u);
        if (q > 0 && (n == 1 || n == -1)) return u;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw InternalError("continued fraction did not produce a unit");
}

UnitInfo fundamental_unit(const Order& order) {
    const FieldDesc& field = order.field();
    UnitInfo info(field);
    const QuadElt one(field, 1, 0);
    if (field.is_real()) {
        info.real = true;
        info.torsion = {one, -one};
        info.torsion_order = 2;
        QuadElt eps = field_fundamental_unit(field);
        QuadElt power = eps;
        // eps^k lies in Z + f*O for some k dividing |(O/fO)^x| <= f^2.
        const std::int64_t cap = order.f() * order.f() + 1;
        std::int64_t k = 1;
        while (!order.contains(power)) {
            CUSPIDAL_CHECK(++k <= cap, "unit power search exceeded its bound");
            power *= eps;
        }
        info.fundamental = power;
        info.has_norm_minus_one = norm(power) == -1;
        return info;
    }
    const QuadElt w = QuadElt::omega(field);
    if (order.is_maximal() && field.m() == -1) {
        info.torsion = {one, w, -one, -w};
        info.torsion_order = 4;
        info.fundamental = w;
    } else if (order.is_maximal() && field.m() == -3) {
        // w = (1 + sqrt(-3))/2 is a primitive 6th root of unity.
        QuadElt z = one;
        for (int i = 0; i < 6; ++i) {
            info.torsion.push_back(z);
            z *= w;
        }
        info.torsion_order = 6;
        info.fundamental = w;
    } else {
        info.torsion = {one, -one};
        info.torsion_order = 2;
        info.fundamental = -one;
    }
    info.has_norm_minus_one = false;
    return info;
}

Int unit_index(const Order& sub, const Order& sup) {
    if (sub.field() != sup.field() || sub.f() % sup.f() != 0)
        throw UsageError(sub.to_string() + " is not contained in " + sup.to_string());
    UnitInfo big = UnitCache::global().get(sup);
    UnitInfo small = UnitCache::global().get(sub);
    if (!big.real) return Int(big.torsion_order / small.torsion_order);
    Int k = 1;
    QuadElt power = big.fundamental;
    while (power != small.fundamental) {
        CUSPIDAL_CHECK(k <= sub.f() * sub.f() + 1, "unit index search exceeded its bound");
        power *= big.fundamental;
        ++k;
    }
    return k;
}

UnitCache& UnitCache::global() {
    static UnitCache cache;
    return cache;
}

UnitInfo UnitCache::get(const Order& order) {
    const auto key = std::make_pair(order.field().m(), order.f());
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it != table_.end()) return it->second;
    }
    UnitInfo info = fundamental_unit(order);
    std::unique_lock lock(mutex_);
    table_.emplace(key, info);
    return info;
}

}  // namespace cuspidal
