#ifndef CUSPIDAL_QUADIDEAL_HPP_
#define CUSPIDAL_QUADIDEAL_HPP_

// Nonzero ideals of the order R = Z + Z*f*w, kept in standard basis
//     I = Z*a + Z*(d + e*f*w),  e | a, e | d, -a/2 <= d < a/2,
// which is unique; N(I) = a*e and Z meets I in Z*a.

#include "cuspidal/config.hpp"
#include "cuspidal/order.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cuspidal {

class QIdeal {
public:
    // Ideal generated by gens over the order. Throws ZeroIdealError when all
    // gens vanish and UsageError when one lies outside the order.
    static QIdeal from_generators(const Order& order, std::span<const QuadElt> gens);
    static QIdeal from_generators(const Order& order, std::initializer_list<QuadElt> gens) {
        std::vector<QuadElt> v(gens);
        return from_generators(order, v);
    }
    // Validates the standard-basis conditions and closure under f*w.
    static QIdeal from_standard_basis(const Order& order, const Int& a, const Int& d, const Int& e);
    // Throws UsageError unless L is an integral ideal of the order.
    static QIdeal from_lattice(const Order& order, const Lattice& L);
    static QIdeal unit(const Order& order) { return QIdeal(order, 1, 0, 1); }

    const Order& order() const { return order_; }
    const FieldDesc& field() const { return order_.field(); }
    const Int& a() const { return a_; }
    const Int& d() const { return d_; }
    const Int& e() const { return e_; }
    Int norm() const { return a_ * e_; }
    bool is_primitive() const { return e_ == 1; }

    // (a, d + e*f*w)
    std::array<QuadElt, 2> standard_pair() const;
    Lattice lattice() const;
    bool contains(const QuadElt& x) const { return lattice().contains(x); }

    bool operator==(const QIdeal& o) const {
        return order_ == o.order_ && a_ == o.a_ && d_ == o.d_ && e_ == o.e_;
    }
    bool operator!=(const QIdeal& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    QIdeal(const Order& order, Int a, Int d, Int e)
        : order_(order), a_(std::move(a)), d_(std::move(d)), e_(std::move(e)) {}

    Order order_;
    Int a_, d_, e_;
};

// e * q_I(x, y) = A x^2 + B x y + C y^2 with q_I(x, y) = N(x a + y(d + efw))/N(I).
struct FormQ {
    Int A, B, C;
};
FormQ norm_form(const QIdeal& I);

Int ideal_norm(const QIdeal& I);
QIdeal ideal_mul(const QIdeal& I, const QIdeal& J);

// numerator / den
struct FractionalIdeal {
    QIdeal numerator;
    Int den;
    Lattice lattice() const;
};

// I^-1 = sigma(I) / N(I)
FractionalIdeal ideal_inverse(const QIdeal& I);

struct MultiplierRing {
    std::int64_t f_prime;  // rho(I) = Z + Z*f'*w
    Int gcd_adef;          // gcd(a, d, e f)
    Int content;           // content(q_I) = gcd(A, B, C)/e
};

// Ring of multipliers from e*content(q_I) = ef/f', checked against the
// lattice (I : I).
MultiplierRing multiplier_ring(const QIdeal& I);
std::int64_t multiplier_conductor(const QIdeal& I);

// Fitt_1(I) = Z*(f/f') + Z*f*w, checked against I*I^-1 and (R : rho(I)).
QIdeal fitt1(const QIdeal& I);

// Some beta with L = beta*S, where L is a fractional ideal of the order S
// that is invertible over S; nullopt when L is not principal.
std::optional<QuadRat> principal_generator(const Lattice& L, const Order& S,
                                           const SearchConfig& cfg = {});

// I ~ J iff I = x J for some x in K^*.
bool is_same_class(const QIdeal& I, const QIdeal& J, const SearchConfig& cfg = {});

// All ideals of norm <= bound, ordered by (norm, a, d, e).
std::vector<QIdeal> ideals_up_to_norm(const Order& order, const Int& bound);

// One ideal of norm at most this bound lies in every ideal class.
Int class_search_norm_bound(const Order& order);

// One representative per class of Cl(R), invertible or not, ordered by norm.
std::vector<QIdeal> enumerate_ideal_classes(const Order& order, const SearchConfig& cfg = {});

}  // namespace cuspidal

#endif  // CUSPIDAL_QUADIDEAL_HPP_
