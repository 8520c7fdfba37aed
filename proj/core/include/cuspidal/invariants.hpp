#ifndef CUSPIDAL_INVARIANTS_HPP_
#define CUSPIDAL_INVARIANTS_HPP_

// Generating pairs of an ideal I of R = Z + Z*f*w up to SL_2(R). With
// f' the conductor of the multiplier ring and n0 = f/f', R/Fitt_1(I) is
// Z/n0, and the determinant class of a pair relative to another one is a
// complete invariant.

#include "cuspidal/intlinalg.hpp"
#include "cuspidal/quadideal.hpp"

#include <vector>

namespace cuspidal {

class GenPair {
public:
    // Throws UsageError unless g1, g2 generate I.
    GenPair(const QIdeal& ideal, QuadElt g1, QuadElt g2);
    // The standard basis (a, d + e*f*w) of I.
    static GenPair standard(const QIdeal& ideal);

    const QIdeal& ideal() const { return ideal_; }
    const QuadElt& g1() const { return g1_; }
    const QuadElt& g2() const { return g2_; }

private:
    QIdeal ideal_;
    QuadElt g1_, g2_;
};

class GenVec {
public:
    // Throws UsageError unless the entries generate I.
    GenVec(const QIdeal& ideal, std::vector<QuadElt> entries);

    const QIdeal& ideal() const { return ideal_; }
    const std::vector<QuadElt>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    QIdeal ideal_;
    std::vector<QuadElt> entries_;
};

// Residue in [0, modulus), coprime to the modulus n0.
struct DetClass {
    Int value;
    Int modulus;
    bool is_one() const { return value == (modulus == 1 ? 0 : 1); }
};

// 2x2 matrix over R acting on row vectors: (g1, g2) * M.
struct Mat2 {
    QuadElt a11, a12, a21, a22;
    QuadElt det() const { return a11 * a22 - a12 * a21; }
};

// R/Fitt_1(I) -> Z/n0: u + v*f*w maps to u mod n0.
Int residue_mod_fitt1(const QIdeal& I, const QuadElt& x);

// Some A over R with m * A = m2.
Mat2 transition_matrix(const GenPair& m, const GenPair& m2);

// Class of det(A) for any A with m * A = m2. Two choices of A are compared.
DetClass det_pair(const GenPair& m, const GenPair& m2);

bool is_sl2_equivalent(const GenPair& m, const GenPair& m2);

// B in SL_2(R) with m * B = m2, verified exactly. Throws UsageError when the
// pairs are not equivalent.
Mat2 sl2_witness(const GenPair& m, const GenPair& m2);

GenPair act(const GenPair& m, const Mat2& sigma);

// {N(u) mod n0 : u unit of rho(I)}, sorted residues in [0, n0).
std::vector<Int> epsilon_subgroup(const QIdeal& I);

// phi(n0) / 2^eps(f, f'), eps = 1 iff rho(I) has a unit of norm -1 and n0 > 2.
Int orbit_count_sl2_mod_units(const QIdeal& I);

// |(Z/n0)^x / image of R^x|.
Int orbit_count_gl2(const QIdeal& I);

// Residues coprime to n0, in [0, n0).
std::vector<Int> unit_residues(const Int& n0);

// (a, r*b) from the standard pair (a, b), with r = u mod n0 the first
// representative r = u + k*n0, k >= 0, for which the pair still generates I.
// Its class relative to the standard pair is u.
GenPair pair_with_det(const QIdeal& I, const Int& u);

struct VectorReduction {
    GenPair pair;
    IntMatrix sigma;  // in SL_n(Z), a subgroup of SL_n(R)
};

// sigma with v * sigma = (g1, g2, 0, ..., 0), verified exactly. n > 2.
VectorReduction reduce_vector(const GenVec& v);

std::vector<QuadElt> act(const std::vector<QuadElt>& v, const IntMatrix& sigma);

}  // namespace cuspidal

#endif  // CUSPIDAL_INVARIANTS_HPP_
