#include "cuspidal/invariants.hpp"

#include "cuspidal/errors.hpp"
#include "cuspidal/units.hpp"

#include <algorithm>
#include <set>

namespace cuspidal {

namespace {

constexpr int kLiftAttempts = 100000;

Int modulus_of(const QIdeal& I) {
    return Int(static_cast<long>(I.order().f() / multiplier_conductor(I)));
}

// Columns: coordinates (1, w) of a, a*f*w, b, b*f*w.
IntMatrix pair_system(const QuadElt& a, const QuadElt& b, const QuadElt& fw) {
    IntMatrix M(2, 4);
    const QuadElt cols[4] = {a, a * fw, b, b * fw};
    for (std::size_t j = 0; j < 4; ++j) {
        M(0, j) = cols[j].a();
        M(1, j) = cols[j].b();
    }
    return M;
}

QuadElt from_coords(const FieldDesc& field, const QuadElt& fw, const Int& u, const Int& v) {
    return QuadElt(field, u, 0) + fw * v;
}

}  // namespace

GenPair::GenPair(const QIdeal& ideal, QuadElt g1, QuadElt g2)
    : ideal_(ideal), g1_(std::move(g1)), g2_(std::move(g2)) {
    bool generates = false;
    try {
        generates = QIdeal::from_generators(ideal.order(), {g1_, g2_}) == ideal;
    } catch (const ZeroIdealError&) {
    }
    if (!generates)
        throw UsageError("(" + g1_.to_string() + ", " + g2_.to_string() + ") does not generate " +
                         ideal.to_string());
}

GenPair GenPair::standard(const QIdeal& ideal) {
    auto p = ideal.standard_pair();
    return GenPair(ideal, p[0], p[1]);
}

GenVec::GenVec(const QIdeal& ideal, std::vector<QuadElt> entries)
    : ideal_(ideal), entries_(std::move(entries)) {
    bool generates = false;
    try {
        generates = QIdeal::from_generators(ideal.order(), entries_) == ideal;
    } catch (const ZeroIdealError&) {
    }
    if (!generates) throw UsageError("vector does not generate " + ideal.to_string());
}

Int residue_mod_fitt1(const QIdeal& I, const QuadElt& x) {
    CUSPIDAL_CHECK(I.order().contains(x), "residue of an element outside R");
    return mod(x.a(), modulus_of(I));
}

Mat2 transition_matrix(const GenPair& m, const GenPair& m2) {
    if (m.ideal() != m2.ideal()) throw UsageError("pairs generate different ideals");
    const FieldDesc& field = m.ideal().field();
    const QuadElt fw = m.ideal().order().generator();
    const IntMatrix M = pair_system(m.g1(), m.g2(), fw);
    auto col1 = solve_integer(M, {m2.g1().a(), m2.g1().b()});
    auto col2 = solve_integer(M, {m2.g2().a(), m2.g2().b()});
    CUSPIDAL_CHECK(col1 && col2, "generating pair does not reach the other pair");
    const auto& x = *col1;
    const auto& y = *col2;
    Mat2 A{from_coords(field, fw, x[0], x[1]), from_coords(field, fw, y[0], y[1]),
           from_coords(field, fw, x[2], x[3]), from_coords(field, fw, y[2], y[3])};
    CUSPIDAL_CHECK(m.g1() * A.a11 + m.g2() * A.a21 == m2.g1() &&
                       m.g1() * A.a12 + m.g2() * A.a22 == m2.g2(),
                   "transition matrix does not map the pair");
    return A;
}

DetClass det_pair(const GenPair& m, const GenPair& m2) {
    const QIdeal& I = m.ideal();
    const Int n0 = modulus_of(I);
    Mat2 A = transition_matrix(m, m2);
    const Int value = residue_mod_fitt1(I, A.det());
    CUSPIDAL_CHECK(gcd(value, n0) == 1 || n0 == 1, "determinant class is not a unit mod f/f'");

    // Any other choice of A differs by a kernel vector; the class must not move.
    const QuadElt fw = I.order().generator();
    const FieldDesc& field = I.field();
    const auto kernel = integer_kernel(pair_system(m.g1(), m.g2(), fw));
    if (!kernel.empty()) {
        const auto& k = kernel.front();
        Mat2 B = A;
        B.a11 += from_coords(field, fw, k[0], k[1]);
        B.a21 += from_coords(field, fw, k[2], k[3]);
        CUSPIDAL_CHECK(residue_mod_fitt1(I, B.det()) == value,
                       "determinant class depends on the choice of matrix");
    }
    return DetClass{value, n0};
}

bool is_sl2_equivalent(const GenPair& m, const GenPair& m2) { return det_pair(m, m2).is_one(); }

GenPair act(const GenPair& m, const Mat2& s) {
    return GenPair(m.ideal(), m.g1() * s.a11 + m.g2() * s.a21, m.g1() * s.a12 + m.g2() * s.a22);
}

Mat2 sl2_witness(const GenPair& m, const GenPair& m2) {
    if (!is_sl2_equivalent(m, m2)) throw UsageError("pairs are not SL_2-equivalent");
    const QIdeal& I = m.ideal();
    const FieldDesc& field = I.field();
    const Mat2 A = transition_matrix(m, m2);
    const QuadElt target = QuadElt(field, 1, 0) - A.det();

    // r*b' - s*a' = 1 - det A with r, s in I^-1 = Z e1 + Z e2.
    const auto e = ideal_inverse(I).lattice().basis();
    const QuadRat prods[4] = {e[0] * QuadRat(m2.g2()), e[1] * QuadRat(m2.g2()),
                              -(e[0] * QuadRat(m2.g1())), -(e[1] * QuadRat(m2.g1()))};
    Int D = 1;
    for (const auto& p : prods) D = lcm(D, p.den());
    IntMatrix M(2, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        const QuadElt scaled = prods[j].num() * Int(D / prods[j].den());
        M(0, j) = scaled.a();
        M(1, j) = scaled.b();
    }
    auto z = solve_integer(M, {target.a() * D, target.b() * D});
    CUSPIDAL_CHECK(z.has_value(), "1 - det A is not in the image of (r, s) -> r b' - s a'");
    const auto& c = *z;
    const QuadRat r = QuadRat(QuadElt(field, c[0], 0)) * e[0] + QuadRat(QuadElt(field, c[1], 0)) * e[1];
    const QuadRat s = QuadRat(QuadElt(field, c[2], 0)) * e[0] + QuadRat(QuadElt(field, c[3], 0)) * e[1];

    auto in_order = [&](const QuadRat& x) {
        CUSPIDAL_CHECK(x.is_integral() && I.order().contains(x.num()), "N(r, s) leaves R");
        return x.num();
    };
    const QuadRat a(m.g1()), b(m.g2());
    Mat2 B{A.a11 + in_order(r * b), A.a12 + in_order(s * b), A.a21 - in_order(r * a),
           A.a22 - in_order(s * a)};
    CUSPIDAL_CHECK(B.det() == QuadElt(field, 1, 0), "witness determinant is not 1");
    GenPair image = act(m, B);
    CUSPIDAL_CHECK(image.g1() == m2.g1() && image.g2() == m2.g2(), "witness does not map the pair");
    return B;
}

std::vector<Int> epsilon_subgroup(const QIdeal& I) {
    const Int n0 = modulus_of(I);
    const Order rho = I.order().overorder(multiplier_conductor(I));
    std::set<Int> out{mod(Int(1), n0)};
    if (UnitCache::global().get(rho).has_norm_minus_one) out.insert(mod(Int(-1), n0));
    return {out.begin(), out.end()};
}

Int orbit_count_sl2_mod_units(const QIdeal& I) {
    const Int n0 = modulus_of(I);
    const Order rho = I.order().overorder(multiplier_conductor(I));
    const bool eps = UnitCache::global().get(rho).has_norm_minus_one && n0 > 2;
    const Int phi = Int(static_cast<long>(euler_phi(to_i64(n0))));
    const Int count = eps ? Int(phi / 2) : phi;
    CUSPIDAL_CHECK(count * Int(static_cast<long>(epsilon_subgroup(I).size())) == phi,
                   "phi(f/f') must equal the orbit count times |eps(I)|");
    return count;
}

std::vector<Int> unit_residues(const Int& n0) {
    std::vector<Int> out;
    if (n0 == 1) return {Int(0)};
    for (Int r = 1; r < n0; ++r)
        if (gcd(r, n0) == 1) out.push_back(r);
    return out;
}

Int orbit_count_gl2(const QIdeal& I) {
    const Int n0 = modulus_of(I);
    const UnitInfo units = UnitCache::global().get(I.order());
    std::vector<Int> gens;
    for (const auto& t : units.torsion) gens.push_back(residue_mod_fitt1(I, t));
    if (units.real) gens.push_back(residue_mod_fitt1(I, units.fundamental));
    std::set<Int> image{mod(Int(1), n0)};
    std::vector<Int> frontier(image.begin(), image.end());
    while (!frontier.empty()) {
        Int x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Int y = mod(x * g, n0);
            if (image.insert(y).second) frontier.push_back(y);
        }
    }
    const Int phi = Int(static_cast<long>(euler_phi(to_i64(n0))));
    const Int size = Int(static_cast<long>(image.size()));
    CUSPIDAL_CHECK(divides(size, phi), "unit image is not a subgroup");
    return phi / size;
}

GenPair pair_with_det(const QIdeal& I, const Int& u) {
    const Int n0 = modulus_of(I);
    if (n0 > 1 && gcd(u, n0) != 1) throw UsageError(u.get_str() + " is not a unit mod " + n0.get_str());
    const auto p = I.standard_pair();
    Int r = mod(u, n0);
    for (int k = 0; k < kLiftAttempts; ++k, r += n0) {
        if (r == 0) continue;
        QuadElt g2 = p[1] * r;
        if (QIdeal::from_generators(I.order(), {p[0], g2}) != I) continue;
        GenPair out(I, p[0], g2);
        CUSPIDAL_CHECK(det_pair(GenPair::standard(I), out).value == mod(u, n0),
                       "lifted pair has the wrong determinant class");
        return out;
    }
    throw InternalError("no lift of the unit class generates the ideal");
}

std::vector<QuadElt> act(const std::vector<QuadElt>& v, const IntMatrix& sigma) {
    CUSPIDAL_CHECK(sigma.rows() == v.size(), "dimension mismatch");
    std::vector<QuadElt> out;
    for (std::size_t j = 0; j < sigma.cols(); ++j) {
        QuadElt acc(v.front().field());
        for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * sigma(i, j);
        out.push_back(acc);
    }
    return out;
}

VectorReduction reduce_vector(const GenVec& v) {
    const std::size_t n = v.size();
    if (n <= 2) throw UsageError("reduce_vector needs length > 2");
    const Int f = v.ideal().order().conductor();
    // Coordinates in the Z-basis (1, f*w) of R.
    std::vector<Int> x, y;
    for (const auto& g : v.entries()) {
        x.push_back(g.a());
        y.push_back(g.b() / f);
    }
    IntMatrix sigma = IntMatrix::identity(n);

    // Column op with det 1 moving gcd(key_i, key_j) into column j and 0 into i.
    auto combine = [&](std::size_t i, std::size_t j, std::vector<Int>& key) {
        if (key[i] == 0) return;
        Int s, t;
        Int g = xgcd(key[j], key[i], s, t);  // s*key_j + t*key_i = g
        const Int ci = key[j] / g, cj = -key[i] / g;
        auto mix = [&](std::vector<Int>& w) {
            Int wi = w[i], wj = w[j];
            w[j] = s * wj + t * wi;
            w[i] = ci * wi + cj * wj;
        };
        mix(x);
        mix(y);
        for (std::size_t r = 0; r < n; ++r) {
            Int wi = sigma(r, i), wj = sigma(r, j);
            sigma(r, j) = s * wj + t * wi;
            sigma(r, i) = ci * wi + cj * wj;
        }
    };

    for (std::size_t i = 0; i + 1 < n; ++i) combine(i, n - 1, y);
    for (std::size_t i = 0; i + 2 < n; ++i) combine(i, n - 2, x);

    // (0, ..., 0, h, v_last) -> (h, v_last, 0, ..., 0), then fix the sign.
    IntMatrix perm(n, n);
    perm(n - 2, 0) = 1;
    perm(n - 1, 1) = 1;
    for (std::size_t j = 2; j < n; ++j) perm(j - 2, j) = 1;
    sigma = sigma * perm;
    if (determinant(sigma) == -1)
        for (std::size_t r = 0; r < n; ++r) sigma(r, n - 1) = -sigma(r, n - 1);

    const std::vector<QuadElt> image = act(v.entries(), sigma);
    CUSPIDAL_CHECK(determinant(sigma) == 1, "reduction matrix is not in SL_n");
    for (std::size_t j = 2; j < n; ++j)
        CUSPIDAL_CHECK(image[j].is_zero(), "reduced vector has a nonzero tail");
    return VectorReduction{GenPair(v.ideal(), image[0], image[1]), sigma};
}

}  // namespace cuspidal
