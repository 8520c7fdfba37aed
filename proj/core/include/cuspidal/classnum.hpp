#ifndef CUSPIDAL_CLASSNUM_HPP_
#define CUSPIDAL_CLASSNUM_HPP_

#include "cuspidal/config.hpp"
#include "cuspidal/order.hpp"

namespace cuspidal {

enum class PicMethod { Forms, ConductorFormula, BruteForce };

const char* to_string(PicMethod method);

struct PicSize {
    Order order;
    Int h;
    PicMethod method;
};

// Reduced primitive positive definite forms of discriminant disc < 0.
Int count_reduced_forms(const Int& disc);

// Imaginary: reduced forms. Real: ideal classes of the maximal order.
PicSize class_number_maximal(const FieldDesc& field, const SearchConfig& cfg = {});

// h(O) |(O/fO)^x| / ([O^x : O_f^x] |(O_f/fO)^x|)
PicSize picard_order(const Order& order, const SearchConfig& cfg = {});

// Invertible classes among the enumerated ideal classes.
PicSize brute_force_pic(const Order& order, const SearchConfig& cfg = {});

// |(S/J)^x| for lattices J in S with S a ring, counted over coset
// representatives: x is a unit iff xS + J = S.
Int quotient_unit_count(const Lattice& S, const Lattice& J);

}  // namespace cuspidal

#endif  // CUSPIDAL_CLASSNUM_HPP_
