#ifndef CUSPIDAL_VERIFY_ORACLES_HPP_
#define CUSPIDAL_VERIFY_ORACLES_HPP_

// Slow, independent reference computations used only by tests and the
// acceptance matrix. None of them calls the code it checks.

#include "cuspidal/curvering.hpp"
#include "cuspidal/intlinalg.hpp"
#include "cuspidal/invariants.hpp"

#include <optional>
#include <random>
#include <vector>

namespace cuspidal::oracle {

// (a, d, e) of the ideal generated by gens, from gcds of coordinates and
// 2x2 minors in the basis (1, f*w), with d found by search.
struct StdBasis {
    Int a, d, e;
};
StdBasis standard_basis(const Order& order, const std::vector<QuadElt>& gens);

// Smallest unit > 1 of O_f (real field) with |b| <= max_b, by solving the
// norm equation for each b.
std::optional<QuadElt> pell_unit(const Order& order, const Int& max_b);

// Units of O_f with coordinates bounded by box.
std::vector<QuadElt> units_in_box(const Order& order, std::int64_t box);

// Primitive reduced forms of discriminant disc < 0 by a plain triple loop.
Int reduced_form_count(std::int64_t disc);

// |(S/J)^x| by searching an inverse for every residue.
Int quotient_units(const Lattice& S, const Lattice& J);

// det over R by cofactor expansion.
QuadElt det_laplace(const std::vector<std::vector<QuadElt>>& M);
Int det_laplace(const IntMatrix& M);

// Determinant classes of all A with entries x + y*f*w, |x|, |y| <= box,
// mapping m to m2, as residues mod n0.
std::vector<Int> det_classes_by_search(const GenPair& m, const GenPair& m2, const Int& n0,
                                       std::int64_t box);

// Units of K[y]/y^k over F_q by exhaustive inverse search.
Int truncated_unit_count(std::int64_t q, int k);

// Smallest g | f with g*w*I inside I, tested on the standard pair.
std::int64_t multiplier_conductor_by_membership(const QIdeal& I);

// g in sum of R*gens_i, solving for coefficients in R of degree <= bound.
bool in_ideal_span(const CoeffField& field, int n, const std::vector<CurvePoly>& gens,
                   const CurvePoly& g, int bound);

// Random nonzero ideal of O_f: one to three generators with small coordinates.
QIdeal random_ideal(const Order& order, std::mt19937_64& rng, std::int64_t box = 12);

// Random element x + y*f*w with |x|, |y| <= box.
QuadElt random_element(const Order& order, std::mt19937_64& rng, std::int64_t box);

// Product of up to max_len elementary matrices with entries x + y*f*w,
// |x|, |y| <= box.
Mat2 random_sl2(const Order& order, std::mt19937_64& rng, int max_len = 8, std::int64_t box = 3);

// Random generating pair of I: the standard pair moved by a random SL_2
// matrix and then by a random unit class.
GenPair random_pair(const QIdeal& I, std::mt19937_64& rng);

// Random nonzero ideal of K[x^2, x^n]: x^(2k) times two or three random
// elements of the ring, degrees <= 2n.
std::vector<CurvePoly> random_curve_gens(const CoeffField& field, int n, std::mt19937_64& rng);

}  // namespace cuspidal::oracle

#endif  // CUSPIDAL_VERIFY_ORACLES_HPP_
