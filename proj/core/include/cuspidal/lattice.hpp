#ifndef CUSPIDAL_LATTICE_HPP_
#define CUSPIDAL_LATTICE_HPP_

// Full-rank Z-submodules of Q(sqrt m). A lattice is stored as
//     (1/den) * (Z*a + Z*(d + c*w))
// with a, c > 0 and -a/2 <= d < a/2, i.e. an upper triangular Hermite basis
// in the coordinates (1, w) plus a scalar; gcd(den, a, d, c) = 1. Equal
// lattices have equal representations.

#include "cuspidal/quadfield.hpp"

#include <array>
#include <span>
#include <vector>

namespace cuspidal {

class Lattice {
public:
    // Z-span of the given elements. Throws UsageError if the span is not of
    // rank 2 (ZeroIdealError if it is zero).
    static Lattice span(const FieldDesc& field, std::span<const QuadRat> gens);
    static Lattice span(const FieldDesc& field, std::span<const QuadElt> gens);

    // Z + Z*f*w
    static Lattice order(const FieldDesc& field, const Int& f);

    const FieldDesc& field() const { return field_; }
    const Int& den() const { return den_; }
    const Int& a() const { return a_; }
    const Int& d() const { return d_; }
    const Int& c() const { return c_; }

    std::array<QuadRat, 2> basis() const;

    // Area of a fundamental domain in (1, w) coordinates.
    Rat covolume() const { return make_rat(a_ * c_, den_ * den_); }

    bool contains(const QuadRat& x) const;
    bool contains(const QuadElt& x) const { return contains(QuadRat(x)); }
    bool contains(const Lattice& L) const;
    bool is_integral() const { return den_ == 1; }

    // Index [*this : sub]; throws UsageError if sub is not contained.
    Int index_of(const Lattice& sub) const;

    Lattice operator+(const Lattice& o) const;
    // Z-span of all products.
    Lattice operator*(const Lattice& o) const;
    Lattice scaled(const QuadRat& x) const;
    Lattice conjugate() const;
    Lattice intersect(const Lattice& o) const;
    // Dual lattice for the coordinate dot product.
    Lattice coordinate_dual() const;

    bool operator==(const Lattice& o) const {
        return field_ == o.field_ && den_ == o.den_ && a_ == o.a_ && d_ == o.d_ && c_ == o.c_;
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Lattice(const FieldDesc& field, Int den, Int a, Int d, Int c);
    static Lattice from_integer_rows(const FieldDesc& field, std::vector<std::array<Int, 2>> rows,
                                     Int den);

    FieldDesc field_;
    Int den_, a_, d_, c_;
};

// (L : M) = {x in K : x*M subset of L}
Lattice colon(const Lattice& L, const Lattice& M);

// Representative of d modulo a in [-a/2, a/2).
Int centered_mod(const Int& d, const Int& a);

}  // namespace cuspidal

#endif  // CUSPIDAL_LATTICE_HPP_
