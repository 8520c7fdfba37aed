#include "cuspidal/lattice.hpp"

#include "cuspidal/errors.hpp"

namespace cuspidal {

Int centered_mod(const Int& d, const Int& a) {
    Int r = mod(d, a);
    if (2 * r >= a) r -= a;
    return r;
}

Lattice::Lattice(const FieldDesc& field, Int den, Int a, Int d, Int c)
    : field_(field), den_(std::move(den)), a_(std::move(a)), d_(std::move(d)), c_(std::move(c)) {}

Lattice Lattice::from_integer_rows(const FieldDesc& field, std::vector<std::array<Int, 2>> rows,
                                   Int den) {
    // Euclid on the w-coordinates until a single row carries their gcd.
    bool any_nonzero = false;
    for (const auto& r : rows)
        if (r[0] != 0 || r[1] != 0) any_nonzero = true;
    if (!any_nonzero) throw ZeroIdealError();

    std::array<Int, 2> pivot{0, 0};
    std::vector<std::array<Int, 2>> rest;
    for (auto& r : rows) {
        if (r[1] == 0) {
            rest.push_back(r);
            continue;
        }
        if (pivot[1] == 0) {
            pivot = r;
            continue;
        }
        Int s, t;
        Int g = xgcd(pivot[1], r[1], s, t);
        Int u = -r[1] / g, v = pivot[1] / g;
        std::array<Int, 2> np{s * pivot[0] + t * r[0], g};
        std::array<Int, 2> nr{u * pivot[0] + v * r[0], 0};
        pivot = np;
        rest.push_back(nr);
    }
    Int a = 0;
    for (const auto& r : rest) a = gcd(a, r[0]);
    if (pivot[1] == 0 || a == 0) throw UsageError("generators do not span a rank-2 lattice");
    Int c = pivot[1];
    if (c < 0) {
        c = -c;
        pivot[0] = -pivot[0];
    }
    Int d = centered_mod(pivot[0], a);
    Int g = gcd(gcd(gcd(a, d), c), den);
    if (g > 1) {
        a /= g;
        d /= g;
        c /= g;
        den /= g;
    }
    if (den < 0) throw InternalError("negative lattice denominator");
    return Lattice(field, den, a, d, c);
}

Lattice Lattice::span(const FieldDesc& field, std::span<const QuadRat> gens) {
    Int den = 1;
    for (const auto& x : gens) {
        if (x.field() != field) throw UsageError("field mismatch in lattice generators");
        den = lcm(den, x.den());
    }
    std::vector<std::array<Int, 2>> rows;
    rows.reserve(gens.size());
    for (const auto& x : gens) {
        Int k = den / x.den();
        rows.push_back({x.num().a() * k, x.num().b() * k});
    }
    return from_integer_rows(field, std::move(rows), den);
}

Lattice Lattice::span(const FieldDesc& field, std::span<const QuadElt> gens) {
    std::vector<std::array<Int, 2>> rows;
    for (const auto& x : gens) {
        if (x.field() != field) throw UsageError("field mismatch in lattice generators");
        rows.push_back({x.a(), x.b()});
    }
    return from_integer_rows(field, std::move(rows), 1);
}

Lattice Lattice::order(const FieldDesc& field, const Int& f) {
    if (f <= 0) throw UsageError("conductor must be positive");
    return Lattice(field, 1, 1, 0, f);
}

std::array<QuadRat, 2> Lattice::basis() const {
    return {QuadRat(QuadElt(field_, a_, 0), den_), QuadRat(QuadElt(field_, d_, c_), den_)};
}

bool Lattice::contains(const QuadRat& x) const {
    if (x.field() != field_) throw UsageError("field mismatch");
    // x = (u*a + v*(d + c*w))/den
    Rat xb = x.coeff_omega() * den_;
    Rat v = xb / c_;
    if (v.get_den() != 1) return false;
    Rat u = (x.coeff1() * den_ - v * d_) / a_;
    return u.get_den() == 1;
}

bool Lattice::contains(const Lattice& L) const {
    for (const auto& b : L.basis())
        if (!contains(b)) return false;
    return true;
}

Int Lattice::index_of(const Lattice& sub) const {
    if (!contains(sub)) throw UsageError("index of a lattice that is not a sublattice");
    Rat q = sub.covolume() / covolume();
    if (q.get_den() != 1) throw InternalError("non-integral lattice index");
    return q.get_num();
}

Lattice Lattice::operator+(const Lattice& o) const {
    auto b1 = basis();
    auto b2 = o.basis();
    std::vector<QuadRat> g{b1[0], b1[1], b2[0], b2[1]};
    return span(field_, g);
}

Lattice Lattice::operator*(const Lattice& o) const {
    auto b1 = basis();
    auto b2 = o.basis();
    std::vector<QuadRat> g;
    for (const auto& x : b1)
        for (const auto& y : b2) g.push_back(x * y);
    return span(field_, g);
}

Lattice Lattice::scaled(const QuadRat& x) const {
    auto b = basis();
    std::vector<QuadRat> g{b[0] * x, b[1] * x};
    return span(field_, g);
}

Lattice Lattice::conjugate() const {
    auto b = basis();
    std::vector<QuadRat> g{cuspidal::conjugate(b[0]), cuspidal::conjugate(b[1])};
    return span(field_, g);
}

Lattice Lattice::coordinate_dual() const {
    // Basis rows B = [[a, 0], [d, c]] / den; dual rows are those of (B^-1)^T
    // = den/(a c) * [[c, -d], [0, a]].
    Rat s = make_rat(den_, a_ * c_);
    Rat e11 = s * c_, e12 = -s * d_, e22 = s * a_;
    Int D = lcm(lcm(e11.get_den(), e12.get_den()), e22.get_den());
    const Rat n11 = e11 * D, n12 = e12 * D, n22 = e22 * D;
    std::vector<QuadRat> gens{QuadRat(QuadElt(field_, n11.get_num(), n12.get_num()), D),
                              QuadRat(QuadElt(field_, 0, n22.get_num()), D)};
    return span(field_, gens);
}

Lattice Lattice::intersect(const Lattice& o) const {
    return (coordinate_dual() + o.coordinate_dual()).coordinate_dual();
}

std::string Lattice::to_string() const {
    std::string inner = "Z*" + a_.get_str() + " + Z*(" + QuadElt(field_, d_, c_).to_string() + ")";
    if (den_ == 1) return inner;
    return "(1/" + den_.get_str() + ")*(" + inner + ")";
}

Lattice colon(const Lattice& L, const Lattice& M) {
    auto b = M.basis();
    Lattice out = L.scaled(b[0].inverse());
    return out.intersect(L.scaled(b[1].inverse()));
}

}  // namespace cuspidal
