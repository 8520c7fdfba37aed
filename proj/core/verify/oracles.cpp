#include "oracles.hpp"

#include "cuspidal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace cuspidal::oracle {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

StdBasis standard_basis(const Order& order, const std::vector<QuadElt>& gens) {
    const Int f = order.conductor();
    const QuadElt fw = order.generator();
    std::vector<std::pair<Int, Int>> v;  // coordinates in (1, f*w)
    for (const auto& g : gens) {
        for (const QuadElt& x : {g, g * fw}) {
            if (!divides(f, x.b())) throw UsageError("generator outside the order");
            v.emplace_back(x.a(), x.b() / f);
        }
    }
    Int e = 0, minors = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        e = gcd(e, v[i].second);
        for (std::size_t j = i + 1; j < v.size(); ++j)
            minors = gcd(minors, v[i].first * v[j].second - v[j].first * v[i].second);
    }
    if (e == 0 || minors == 0) throw UsageError("generators do not span a lattice");
    const Int a = minors / e;
    for (Int d = -fdiv(a, 2); 2 * d < a; ++d) {
        bool ok = true;
        for (const auto& [x, y] : v)
            if (!divides(a, x - (y / e) * d)) ok = false;
        if (ok) return StdBasis{a, d, e};
    }
    throw InternalError("oracle found no d");
}

std::optional<QuadElt> pell_unit(const Order& order, const Int& max_b) {
    const FieldDesc& F = order.field();
    const Int t = F.trace_omega(), k0 = F.sq_const();
    // Units > 1 have b > 0 and b is non-decreasing along powers, so the
    // fundamental unit is the smallest one with the least b.
    for (Int b = order.conductor(); b <= max_b; b += order.conductor()) {
        std::optional<QuadElt> best;
        for (int s : {1, -1}) {
            const Int disc = b * b * t * t + 4 * (k0 * b * b + s);
            if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
            Int r;
            mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
            for (const Int& num : {Int(-b * t + r), Int(-b * t - r)}) {
                if (!divides(Int(2), num)) continue;
                QuadElt u(F, num / 2, b);
                if (norm(u) != s || real_embedding(u) <= 1) continue;
                if (!best || real_embedding(u) < real_embedding(*best)) best = u;
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

std::vector<QuadElt> units_in_box(const Order& order, std::int64_t box) {
    std::vector<QuadElt> out;
    const QuadElt fw = order.generator();
    for (std::int64_t x = -box; x <= box; ++x)
        for (std::int64_t y = -box; y <= box; ++y) {
            QuadElt u = QuadElt(order.field(), x) + fw * Int(static_cast<long>(y));
            Int n = norm(u);
            if (n == 1 || n == -1) out.push_back(u);
        }
    return out;
}

Int reduced_form_count(std::int64_t disc) {
    const std::int64_t D = -disc;
    std::int64_t count = 0;
    for (std::int64_t a = 1; a <= D; ++a)
        for (std::int64_t b = -a; b <= a; ++b)
            for (std::int64_t c = a; 4 * a * c - b * b <= D; ++c) {
                if (b * b - 4 * a * c != disc) continue;
                if ((b == -a || a == c) && b < 0) continue;
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                ++count;
            }
    return count;
}

Int quotient_units(const Lattice& S, const Lattice& J) {
    const auto s = S.basis();
    const Rat alpha_r = make_rat(J.a() * S.den(), S.a() * J.den());
    const Rat gamma_r = make_rat(J.c() * S.den(), S.c() * J.den());
    if (alpha_r.get_den() != 1 || gamma_r.get_den() != 1) throw UsageError("J is not inside S");
    const Int alpha = alpha_r.get_num(), gamma = gamma_r.get_num();
    const FieldDesc& F = S.field();
    std::vector<QuadRat> reps;
    for (Int u = 0; u < alpha; ++u)
        for (Int v = 0; v < gamma; ++v)
            reps.push_back(QuadRat(QuadElt(F, u)) * s[0] + QuadRat(QuadElt(F, v)) * s[1]);
    const QuadRat one(QuadElt(F, 1));
    Int count = 0;
    for (const auto& x : reps)
        for (const auto& y : reps)
            if (J.contains(x * y - one)) {
                ++count;
                break;
            }
    return count;
}

QuadElt det_laplace(const std::vector<std::vector<QuadElt>>& M) {
    const std::size_t n = M.size();
    if (n == 1) return M[0][0];
    QuadElt out(M[0][0].field());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<QuadElt>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<QuadElt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(M[i][k]);
            minor.push_back(row);
        }
        QuadElt term = M[0][j] * det_laplace(minor);
        out = j % 2 == 0 ? out + term : out - term;
    }
    return out;
}

Int det_laplace(const IntMatrix& M) {
    const std::size_t n = M.rows();
    if (n == 1) return M(0, 0);
    Int out = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = M(i, k);
        Int term = M(0, j) * det_laplace(minor);
        out += j % 2 == 0 ? term : Int(-term);
    }
    return out;
}

std::vector<Int> det_classes_by_search(const GenPair& m, const GenPair& m2, const Int& n0,
                                       std::int64_t box) {
    const Order& R = m.ideal().order();
    std::vector<QuadElt> entries;
    for (std::int64_t x = -box; x <= box; ++x)
        for (std::int64_t y = -box; y <= box; ++y)
            entries.push_back(QuadElt(R.field(), x) + R.generator() * Int(static_cast<long>(y)));
    std::set<Int> classes;
    // Columns are independent: (a11, a21) maps m to m2.g1, (a12, a22) to m2.g2.
    std::vector<std::pair<QuadElt, QuadElt>> c1, c2;
    for (const auto& u : entries)
        for (const auto& v : entries) {
            const QuadElt img = m.g1() * u + m.g2() * v;
            if (img == m2.g1()) c1.emplace_back(u, v);
            if (img == m2.g2()) c2.emplace_back(u, v);
        }
    for (const auto& [a11, a21] : c1)
        for (const auto& [a12, a22] : c2) classes.insert(mod((a11 * a22 - a12 * a21).a(), n0));
    return {classes.begin(), classes.end()};
}

Int truncated_unit_count(std::int64_t q, int k) {
    if (k == 0) return 1;
    std::int64_t size = 1;
    for (int i = 0; i < k; ++i) size *= q;
    auto digits = [&](std::int64_t idx) {
        std::vector<std::int64_t> c(k);
        for (int i = 0; i < k; ++i, idx /= q) c[i] = idx % q;
        return c;
    };
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < size; ++i) {
        const auto a = digits(i);
        for (std::int64_t j = 0; j < size; ++j) {
            const auto b = digits(j);
            std::vector<std::int64_t> prod(k, 0);
            for (int s = 0; s < k; ++s)
                for (int t = 0; s + t < k; ++t) prod[s + t] = (prod[s + t] + a[s] * b[t]) % q;
            bool one = prod[0] == 1;
            for (int s = 1; s < k && one; ++s) one = prod[s] == 0;
            if (one) {
                ++count;
                break;
            }
        }
    }
    return count;
}

std::int64_t multiplier_conductor_by_membership(const QIdeal& I) {
    const auto basis = I.standard_pair();
    const Lattice L = I.lattice();
    for (std::int64_t g : divisors(I.order().f())) {
        const QuadElt gw(I.field(), 0, Int(static_cast<long>(g)));
        if (L.contains(basis[0] * gw) && L.contains(basis[1] * gw)) return g;
    }
    throw InternalError("f*w does not stabilise I");
}

bool in_ideal_span(const CoeffField& field, int n, const std::vector<CurvePoly>& gens,
                   const CurvePoly& g, int bound) {
    if (g.is_zero()) return true;
    long top = g.degree();
    for (const auto& h : gens) top = std::max(top, h.degree() + bound);
    const std::size_t len = static_cast<std::size_t>(top + 1);
    // Gaussian elimination on the spanning rows x^i h, i admissible in R.
    std::vector<std::vector<Rat>> rows;
    for (const auto& h : gens) {
        if (h.is_zero()) continue;
        for (int i = 0; i <= bound; ++i) {
            if (i % 2 == 1 && i < n) continue;
            std::vector<Rat> r(len, Rat(0));
            const CurvePoly s = h.shifted(static_cast<std::size_t>(i));
            for (std::size_t j = 0; j < s.coeffs().size(); ++j) r[j] = s.coeffs()[j];
            rows.push_back(std::move(r));
        }
    }
    std::vector<Rat> target(len, Rat(0));
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) target[j] = g.coeffs()[j];
    // Reduce the target against an echelon basis built from highest degree down.
    std::vector<std::vector<Rat>> basis;
    std::vector<std::size_t> lead;
    auto reduce = [&](std::vector<Rat>& v) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (v[lead[b]] == 0) continue;
            const Rat k = v[lead[b]];
            for (std::size_t j = 0; j < len; ++j) v[j] = field.reduce(v[j] - k * basis[b][j]);
        }
    };
    for (auto& r : rows) {
        reduce(r);
        std::size_t j = len;
        while (j > 0 && r[j - 1] == 0) --j;
        if (j == 0) continue;
        const Rat inv = field.inverse(r[j - 1]);
        for (auto& x : r) x = field.reduce(x * inv);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (basis[b][j - 1] == 0) continue;
            const Rat k = basis[b][j - 1];
            for (std::size_t t = 0; t < len; ++t) basis[b][t] = field.reduce(basis[b][t] - k * r[t]);
        }
        basis.push_back(r);
        lead.push_back(j - 1);
    }
    reduce(target);
    return std::all_of(target.begin(), target.end(), [](const Rat& x) { return x == 0; });
}

QuadElt random_element(const Order& order, std::mt19937_64& rng, std::int64_t box) {
    return QuadElt(order.field(), uniform(rng, -box, box)) +
           order.generator() * Int(static_cast<long>(uniform(rng, -box, box)));
}

QIdeal random_ideal(const Order& order, std::mt19937_64& rng, std::int64_t box) {
    // Half the time take generators from (f/g) O_g for a divisor g of f, which
    // favours ideals with a larger multiplier ring.
    const auto divs = divisors(order.f());
    const std::int64_t g = uniform(rng, 0, 1) ? divs[uniform(rng, 0, divs.size() - 1)] : order.f();
    const Order sub = order.overorder(g);
    const Int scale = Int(static_cast<long>(order.f() / g));
    std::vector<QuadElt> gens;
    const int count = static_cast<int>(uniform(rng, 1, 3));
    while (static_cast<int>(gens.size()) < count || gens.empty()) {
        QuadElt x = random_element(sub, rng, box) * scale;
        if (!x.is_zero()) gens.push_back(x);
    }
    return QIdeal::from_generators(order, gens);
}

Mat2 random_sl2(const Order& order, std::mt19937_64& rng, int max_len, std::int64_t box) {
    const FieldDesc& F = order.field();
    const QuadElt one(F, 1), zero(F);
    Mat2 acc{one, zero, zero, one};
    const int len = static_cast<int>(uniform(rng, 0, max_len));
    for (int i = 0; i < len; ++i) {
        const QuadElt r = random_element(order, rng, box);
        const Mat2 E = uniform(rng, 0, 1) ? Mat2{one, r, zero, one} : Mat2{one, zero, r, one};
        acc = Mat2{acc.a11 * E.a11 + acc.a12 * E.a21, acc.a11 * E.a12 + acc.a12 * E.a22,
                   acc.a21 * E.a11 + acc.a22 * E.a21, acc.a21 * E.a12 + acc.a22 * E.a22};
    }
    return acc;
}

GenPair random_pair(const QIdeal& I, std::mt19937_64& rng) {
    const Int n0 = Int(static_cast<long>(I.order().f() / multiplier_conductor(I)));
    const auto units = unit_residues(n0);
    const GenPair base = pair_with_det(I, units[uniform(rng, 0, units.size() - 1)]);
    return act(base, random_sl2(I.order(), rng, 4, 2));
}

std::vector<CurvePoly> random_curve_gens(const CoeffField& field, int n, std::mt19937_64& rng) {
    // x^(2k) h lies in R when the odd part of h starts at degree n - 2k.
    const int k = static_cast<int>(uniform(rng, 0, (n - 1) / 2));
    const int count = static_cast<int>(uniform(rng, 2, 3));
    auto coeff = [&]() -> Rat {
        if (!field.is_rational()) return Rat(uniform(rng, 0, field.characteristic() - 1));
        if (uniform(rng, 0, 5) == 0) return Rat(uniform(rng, -4, 4), uniform(rng, 1, 3));
        return Rat(uniform(rng, -4, 4));
    };
    std::vector<CurvePoly> gens;
    while (true) {
        gens.clear();
        for (int i = 0; i < count; ++i) {
            std::vector<Rat> c(2 * n + 1, Rat(0));
            for (int j = 0; j <= 2 * n; ++j) {
                if (j % 2 == 1 && j < n - 2 * k) continue;
                if (uniform(rng, 0, 1)) c[j] = coeff();
            }
            c[0] = uniform(rng, 0, 2) ? coeff() : Rat(0);
            gens.push_back(CurvePoly(field, std::move(c)).shifted(static_cast<std::size_t>(2 * k)));
        }
        if (std::any_of(gens.begin(), gens.end(), [](const CurvePoly& g) { return !g.is_zero(); }))
            return gens;
    }
}

}  // namespace cuspidal::oracle
