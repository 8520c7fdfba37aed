#include "cuspidal/quadideal.hpp"

#include "cuspidal/errors.hpp"
#include "cuspidal/units.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace cuspidal {

QIdeal QIdeal::from_lattice(const Order& order, const Lattice& L) {
    if (L.field() != order.field()) throw UsageError("field mismatch");
    if (!L.is_integral() || !order.lattice().contains(L))
        throw UsageError(L.to_string() + " is not contained in " + order.to_string());
    const Int f = order.conductor();
    if (!divides(f, L.c())) throw InternalError("w-coordinate of an order ideal not divisible by f");
    const Int e = L.c() / f;
    const QuadElt fw = order.generator();
    for (const auto& b : L.basis())
        if (!L.contains(b * QuadRat(fw)))
            throw UsageError(L.to_string() + " is not an ideal of " + order.to_string());
    CUSPIDAL_CHECK(divides(e, L.a()) && divides(e, L.d()), "standard basis: e must divide a and d");
    return QIdeal(order, L.a(), L.d(), e);
}

QIdeal QIdeal::from_generators(const Order& order, std::span<const QuadElt> gens) {
    std::vector<QuadElt> zgens;
    const QuadElt fw = order.generator();
    for (const auto& g : gens) {
        if (g.field() != order.field()) throw UsageError("field mismatch");
        if (!order.contains(g))
            throw UsageError(g.to_string() + " is not in " + order.to_string());
        zgens.push_back(g);
        zgens.push_back(g * fw);
    }
    if (zgens.empty()) throw ZeroIdealError();
    return from_lattice(order, Lattice::span(order.field(), zgens));
}

QIdeal QIdeal::from_standard_basis(const Order& order, const Int& a, const Int& d, const Int& e) {
    if (a <= 0 || e <= 0) throw UsageError("standard basis needs a > 0 and e > 0");
    if (!divides(e, a) || !divides(e, d)) throw UsageError("standard basis needs e | a and e | d");
    if (2 * d < -a || 2 * d >= a) throw UsageError("standard basis needs -a/2 <= d < a/2");
    std::vector<QuadElt> g{QuadElt(order.field(), a, 0), QuadElt(order.field(), d, e * order.conductor())};
    QIdeal I = from_lattice(order, Lattice::span(order.field(), g));
    CUSPIDAL_CHECK(I.a_ == a && I.d_ == d && I.e_ == e, "standard basis is not canonical");
    return I;
}

std::array<QuadElt, 2> QIdeal::standard_pair() const {
    return {QuadElt(field(), a_, 0), QuadElt(field(), d_, e_ * order_.conductor())};
}

Lattice QIdeal::lattice() const {
    auto p = standard_pair();
    return Lattice::span(field(), p);
}

std::string QIdeal::to_string() const {
    auto p = standard_pair();
    return "(" + p[0].to_string() + ", " + p[1].to_string() + ")";
}

FormQ norm_form(const QIdeal& I) {
    const QuadElt beta = I.standard_pair()[1];
    Int n = norm(beta);
    CUSPIDAL_CHECK(divides(I.a(), n), "a must divide N(d + efw)");
    return FormQ{I.a(), trace(beta), n / I.a()};
}

Int ideal_norm(const QIdeal& I) { return I.norm(); }

QIdeal ideal_mul(const QIdeal& I, const QIdeal& J) {
    if (I.order() != J.order()) throw UsageError("ideals of different orders");
    auto p = I.standard_pair();
    auto q = J.standard_pair();
    std::vector<QuadElt> prods;
    for (const auto& x : p)
        for (const auto& y : q) prods.push_back(x * y);
    return QIdeal::from_generators(I.order(), prods);
}

Lattice FractionalIdeal::lattice() const {
    return numerator.lattice().scaled(QuadRat(QuadElt(numerator.field(), 1, 0), den));
}

FractionalIdeal ideal_inverse(const QIdeal& I) {
    QIdeal sigma = QIdeal::from_lattice(I.order(), I.lattice().conjugate());
    return FractionalIdeal{sigma, I.norm()};
}

MultiplierRing multiplier_ring(const QIdeal& I) {
    const Int ef = I.e() * I.order().conductor();
    const FormQ q = norm_form(I);
    // e*content(q_I) = ef/f'. gcd(a, d, ef) is only a multiple of it: for
    // m = -1, f = 4, I = (4, -2 + 4w) it is 2 while I is invertible.
    const Int gq = gcd(gcd(q.A, q.B), q.C);
    CUSPIDAL_CHECK(divides(I.e(), gq) && divides(gq, ef), "e*content(q_I) must divide ef");
    const Int fp = ef / gq;
    CUSPIDAL_CHECK(divides(fp, I.order().conductor()), "f' must divide f");
    const Order rho = I.order().overorder(to_i64(fp));
    const Lattice L = I.lattice();
    CUSPIDAL_CHECK(colon(L, L) == rho.lattice(), "(I : I) must be the order of conductor f'");
    return MultiplierRing{to_i64(fp), gcd(gcd(I.a(), I.d()), ef), gq / I.e()};
}

std::int64_t multiplier_conductor(const QIdeal& I) { return multiplier_ring(I).f_prime; }

QIdeal fitt1(const QIdeal& I) {
    const Order& R = I.order();
    const std::int64_t fp = multiplier_conductor(I);
    const Int n0 = Int(static_cast<long>(R.f() / fp));
    QIdeal F = QIdeal::from_standard_basis(R, n0, 0, 1);
    const Lattice FL = F.lattice();
    CUSPIDAL_CHECK(FL == I.lattice() * ideal_inverse(I).lattice(), "Fitt_1(I) must equal I I^-1");
    CUSPIDAL_CHECK(FL == colon(R.lattice(), R.overorder(fp).lattice()),
                   "Fitt_1(I) must equal (R : rho(I))");
    CUSPIDAL_CHECK(R.lattice().index_of(FL) == n0, "|R/Fitt_1(I)| must be f/f'");
    return F;
}

std::optional<QuadRat> principal_generator(const Lattice& L, const Order& S, const SearchConfig& cfg) {
    const FieldDesc& field = S.field();
    if (L.field() != field) throw UsageError("field mismatch");
    // Clear the denominator; principality is unchanged by rational scaling.
    const Lattice M = L.scaled(QuadRat(QuadElt(field, L.den(), 0)));
    const Rat idx = M.covolume() / S.lattice().covolume();
    if (idx.get_den() != 1) return std::nullopt;
    const Int n = idx.get_num();
    const Int a = M.a();
    const Int c = M.c();
    const QuadElt beta(field, M.d(), c);
    const Int T = trace(beta);
    const Int dK = Int(static_cast<long>(field.disc()));

    // x*a + y*beta has norm s*n iff t^2 = c^2 dK y^2 + 4 s n and
    // x = (-T y +- t)/(2a).
    Int Y;
    if (!field.is_real()) {
        Y = isqrt(fdiv(4 * n, c * c * (-dK)));
    } else {
        // Up to units of S a generator satisfies |beta_1|, |beta_2| <= sqrt(n eps),
        // so |y c| <= 2 sqrt(n eps / dK).
        const long double eps = real_embedding(UnitCache::global().get(S).fundamental);
        const long double bound =
            2.0L * std::sqrt(n.get_d() * eps / dK.get_d()) / c.get_d() + 2.0L;
        if (!std::isfinite(bound) || bound > cfg.search_bound.get_d())
            throw Inconclusive("principality search for " + L.to_string() + " exceeds the search bound");
        Y = Int(static_cast<double>(std::floor(bound)));
    }
    if (Y > cfg.search_bound)
        throw Inconclusive("principality search for " + L.to_string() + " exceeds the search bound");

    const int signs = field.is_real() ? 2 : 1;
    for (Int y = 0; y <= Y; ++y) {
        for (int ys = 0; ys < (y == 0 ? 1 : 2); ++ys) {
            const Int yy = ys == 0 ? y : Int(-y);
            for (int si = 0; si < signs; ++si) {
                const Int s = si == 0 ? 1 : -1;
                const Int disc = c * c * dK * yy * yy + 4 * s * n;
                if (!is_square(disc)) continue;
                const Int t = isqrt(disc);
                for (const Int& num : {Int(-T * yy + t), Int(-T * yy - t)}) {
                    if (!divides(2 * a, num)) continue;
                    const Int x = num / (2 * a);
                    QuadElt g = QuadElt(field, x * a, 0) + beta * yy;
                    if (g.is_zero()) continue;
                    CUSPIDAL_CHECK(norm(g) == s * n, "principal generator norm mismatch");
                    if (M.scaled(QuadRat(g).inverse()) != S.lattice()) continue;
                    return QuadRat(g, L.den());
                }
            }
        }
    }
    return std::nullopt;
}

bool is_same_class(const QIdeal& I, const QIdeal& J, const SearchConfig& cfg) {
    if (I.order() != J.order()) throw UsageError("ideals of different orders");
    if (I == J) return true;
    const std::int64_t fp = multiplier_conductor(I);
    if (fp != multiplier_conductor(J)) return false;
    // Both are invertible over S = rho(I); I ~ J iff I sigma(J) is principal over S.
    const Order S = I.order().overorder(fp);
    return principal_generator(I.lattice() * J.lattice().conjugate(), S, cfg).has_value();
}

std::vector<QIdeal> ideals_up_to_norm(const Order& order, const Int& bound) {
    std::vector<QIdeal> out;
    const Int f = order.conductor();
    const FieldDesc& field = order.field();
    for (Int N = 1; N <= bound; ++N) {
        for (Int e = 1; e * e <= N; ++e) {
            if (!divides(e * e, N)) continue;
            // primitive part Z*A + Z*(D + f w), A = N/e^2
            const Int A = N / (e * e);
            for (Int D = -fdiv(A, 2); 2 * D < A; ++D) {
                if (!divides(A, norm(QuadElt(field, D, f)))) continue;
                out.push_back(QIdeal::from_standard_basis(order, A * e, D * e, e));
            }
        }
    }
    return out;
}

Int class_search_norm_bound(const Order& order) {
    // An invertible class of conductor f' holds an ideal J of O_f' with
    // N(J) <= Minkowski(f'^2 dK); (f/f')J is then an R-ideal of norm (f/f') N(J).
    Int best = 1;
    const Int dK = Int(static_cast<long>(order.field().disc()));
    for (std::int64_t fp : divisors(order.f())) {
        const Int k = Int(static_cast<long>(order.f() / fp));
        const Int D = Int(static_cast<long>(fp * fp)) * dK;
        Int mk;
        if (D > 0) {
            mk = isqrt(fdiv(D * k * k, 4));
        } else {
            long double v = 2.0L / std::numbers::pi_v<long double> *
                            std::sqrt(static_cast<long double>(Int(-D).get_d())) * k.get_d();
            mk = Int(static_cast<double>(std::floor(v))) + 1;
        }
        if (mk > best) best = mk;
    }
    return best;
}

std::vector<QIdeal> enumerate_ideal_classes(const Order& order, const SearchConfig& cfg) {
    Int D = order.disc();
    if (D < 0) D = -D;
    if (D > cfg.disc_bound)
        throw Inconclusive("|disc| = " + D.get_str() + " exceeds the configured bound " +
                           cfg.disc_bound.get_str());
    std::vector<QIdeal> reps;
    std::map<std::int64_t, std::vector<std::size_t>> by_conductor;
    for (const QIdeal& I : ideals_up_to_norm(order, class_search_norm_bound(order))) {
        const std::int64_t fp = multiplier_conductor(I);
        auto& bucket = by_conductor[fp];
        bool seen = false;
        for (std::size_t idx : bucket) {
            if (is_same_class(reps[idx], I, cfg)) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            bucket.push_back(reps.size());
            reps.push_back(I);
        }
    }
    return reps;
}

}  // namespace cuspidal
