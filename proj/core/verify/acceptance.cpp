#include "acceptance.hpp"

#include "oracles.hpp"

#include "cuspidal/curvering.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/units.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace cuspidal::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::int64_t> kMaassFields = {-1, -2, -3, -5, -7, -11, -15, 2, 3, 5, 6, 7};
const std::vector<std::int64_t> kCuspFields = {-1, -2, -3, -5, 2, 3, 5};

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Counts checks and keeps the first violation.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    std::string summary(const std::string& extra = "") const {
        std::ostringstream os;
        if (!ok()) os << "violated: " << failure_ << "; ";
        os << checks_ << " checks";
        if (!extra.empty()) os << ", " << extra;
        return os.str();
    }

private:
    long checks_ = 0;
    std::string failure_;
};

struct Outcome {
    bool ok;
    std::string detail;
};

std::string tag(std::int64_t m, std::int64_t f) {
    return "(m=" + std::to_string(m) + ", f=" + std::to_string(f) + ")";
}

Int phi_by_count(const Int& n0) {
    Int c = 0;
    for (Int r = 0; r < n0; ++r)
        if (gcd(r, n0) == 1) ++c;
    return c;
}

// The ideals (f/g) O_g = Z(f/g) + Z f w for every g | f, plus random ones.
std::vector<QIdeal> tested_ideals(const Order& R, std::mt19937_64& rng, int random_count) {
    std::vector<QIdeal> out;
    for (std::int64_t g : divisors(R.f())) {
        const Int k = Int(static_cast<long>(R.f() / g));
        out.push_back(QIdeal::from_generators(R, {QuadElt(R.field(), k), R.generator()}));
    }
    for (int i = 0; i < random_count; ++i) out.push_back(oracle::random_ideal(R, rng));
    return out;
}

Outcome maass(const Options& o) {
    Tally t;
    double worst = 0;
    for (std::int64_t m : kMaassFields) {
        const auto t0 = Clock::now();
        const Order O(FieldDesc(m), 1);
        const Int cusps = cusp_count(O, o.cfg, o.pic_override).total;
        const Int pic = picard_order(O, o.cfg).h;
        const double s = since(t0);
        worst = std::max(worst, s);
        t.check(cusps == pic, "Maass consistency cusp_count(O) = |Pic(O)| at " + tag(m, 1) + ": " +
                                  cusps.get_str() + " vs " + pic.get_str());
        t.check(s < 1.0, "time limit 1 s per field at " + tag(m, 1));
    }
    std::ostringstream os;
    os << "slowest field " << worst << " s";
    return {t.ok(), t.summary(os.str())};
}

Outcome formula_vs_direct(const Options& o) {
    Tally t;
    const auto t0 = Clock::now();
    for (std::int64_t m : kCuspFields) {
        const FieldDesc F(m);
        for (std::int64_t f = 1; f <= 8; ++f) {
            const Order R(F, f);
            const Int formula = cusp_count(R, o.cfg, o.pic_override).total;
            const Int direct = cusp_count_direct(R, o.cfg);
            t.check(formula == direct, "cusp_count = cusp_count_direct at " + tag(m, f) + ": " +
                                           formula.get_str() + " vs " + direct.get_str());
            const Int h = picard_order(Order(F, 1), o.cfg).h;
            t.check(divides(h, formula), "|Pic(O)| divides the cusp count at " + tag(m, f));
        }
    }
    t.check(since(t0) < 120.0, "time limit 120 s");
    return {t.ok(), t.summary()};
}

Outcome fitting_triple(const Options& o) {
    Tally t;
    std::mt19937_64 rng(o.seed + 3);
    int count = 0;
    for (int round = 0; round < 42; ++round) {
        for (std::int64_t m : kMaassFields) {
            const Order R(FieldDesc(m), 1 + round % 6);
            const QIdeal I = oracle::random_ideal(R, rng);
            const std::int64_t fp = oracle::multiplier_conductor_by_membership(I);
            const std::string at = I.to_string() + " in " + R.to_string();
            t.check(multiplier_conductor(I) == fp, "f' by formula = f' by membership for " + at);
            const Lattice F = fitt1(I).lattice();
            t.check(F == I.lattice() * ideal_inverse(I).lattice(), "Fitt_1(I) = I I^-1 for " + at);
            t.check(F == colon(R.lattice(), R.overorder(fp).lattice()), "Fitt_1(I) = (R : O_f') for " + at);
            t.check(R.lattice().index_of(F) == Int(static_cast<long>(R.f() / fp)),
                    "|R/Fitt_1(I)| = f/f' for " + at);
            ++count;
        }
    }
    return {t.ok(), t.summary(std::to_string(count) + " ideals")};
}

Outcome determinant_invariance(const Options& o) {
    Tally t;
    std::mt19937_64 rng(o.seed + 4);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t m = kCuspFields[i % kCuspFields.size()];
        const Order R(FieldDesc(m), 1 + (i / 7) % 6);
        const QIdeal I = oracle::random_ideal(R, rng);
        const GenPair a = oracle::random_pair(I, rng);
        const Mat2 sigma = oracle::random_sl2(R, rng, 8, 3);
        const std::string at = "pair " + std::to_string(i) + " over " + I.to_string() + " in " + R.to_string();
        t.check(sigma.det() == QuadElt(R.field(), 1), "random sigma has det 1 (" + at + ")");
        const GenPair b = act(a, sigma);
        t.check(det_pair(a, b).is_one(), "det_pair(m, m sigma) = 1 for " + at);
        t.check(is_sl2_equivalent(a, b), "is_sl2_equivalent(m, m sigma) for " + at);
        const Mat2 B = sl2_witness(a, b);
        const QuadElt d = oracle::det_laplace({{B.a11, B.a12}, {B.a21, B.a22}});
        t.check(d == QuadElt(R.field(), 1), "det B = 1 for " + at);
        t.check(a.g1() * B.a11 + a.g2() * B.a21 == b.g1() && a.g1() * B.a12 + a.g2() * B.a22 == b.g2(),
                "m B = m' for " + at);
    }
    return {t.ok(), t.summary("1000 pairs")};
}

Outcome surjectivity(const Options& o) {
    Tally t;
    std::mt19937_64 rng(o.seed + 5);
    int ideals = 0;
    for (std::int64_t m : kCuspFields) {
        for (std::int64_t f = 1; f <= 8; ++f) {
            const Order R(FieldDesc(m), f);
            for (const QIdeal& I : tested_ideals(R, rng, 2)) {
                const Int n0 = Int(static_cast<long>(f / oracle::multiplier_conductor_by_membership(I)));
                const GenPair base = GenPair::standard(I);
                std::set<Int> realized;
                for (const Int& u : unit_residues(n0)) {
                    const GenPair p = pair_with_det(I, u);
                    // p = (a, r b) is base * diag(1, r), so its class is r mod n0.
                    Int r = 0;
                    bool diagonal = p.g1() == base.g1();
                    if (diagonal) {
                        const QuadElt& b = base.g2();
                        r = p.g2().b() / b.b();
                        diagonal = p.g2() == b * r;
                    }
                    t.check(diagonal && mod(r, n0) == u, "constructed pair is (a, r b) with r = u for " +
                                                              I.to_string() + ", u = " + u.get_str());
                    realized.insert(det_pair(base, p).value);
                }
                std::set<Int> want;
                for (Int r = 0; r < n0; ++r)
                    if (gcd(r, n0) == 1) want.insert(mod(r, n0));
                t.check(realized == want, "every class of (Z/(f/f'))^x realized for " + I.to_string() +
                                              " in " + R.to_string());
                ++ideals;
            }
        }
    }
    return {t.ok(), t.summary(std::to_string(ideals) + " ideals")};
}

Outcome picard_vs_brute(const Options& o) {
    Tally t;
    const auto t0 = Clock::now();
    int instances = 0;
    for (std::int64_t m = -1; m >= -200; --m) {
        if (!is_squarefree(m)) continue;
        const FieldDesc F(m);
        for (std::int64_t f = 1; f * f * -F.disc() <= 200; ++f) {
            const Order R(F, f);
            const Int h = picard_order(R, o.cfg).h;
            const Int forms = oracle::reduced_form_count(f * f * F.disc());
            t.check(h == forms, "picard_order = reduced form count at " + tag(m, f) + ": " + h.get_str() +
                                    " vs " + forms.get_str());
            ++instances;
        }
    }
    for (std::int64_t m = 2; m <= 15; ++m) {
        if (!is_squarefree(m)) continue;
        for (std::int64_t f = 1; f <= 3; ++f) {
            const Order R(FieldDesc(m), f);
            const Int h = picard_order(R, o.cfg).h;
            const Int bf = brute_force_pic(R, o.cfg).h;
            t.check(h == bf, "picard_order = brute_force_pic at " + tag(m, f) + ": " + h.get_str() + " vs " +
                                 bf.get_str());
            ++instances;
        }
    }
    t.check(since(t0) < 60.0, "time limit 60 s");
    return {t.ok(), t.summary(std::to_string(instances) + " orders")};
}

Outcome curve_ring(const Options& o) {
    Tally t;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(o.seed + 7);
    int literal_agree = 0, total = 0;
    for (int n : {3, 5, 7}) {
        for (const CoeffField& K : {CoeffField::rational(), CoeffField::prime(5)}) {
            for (int i = 0; i < 200; ++i) {
                const auto gens = oracle::random_curve_gens(K, n, rng);
                const CurveIdeal I = curve_reduce_pair(K, n, gens);
                const std::string at = "ideal " + std::to_string(i) + " (n=" + std::to_string(n) + ", " +
                                       K.to_string() + ")";
                // Shape of (p, q, nu).
                bool shape = I.p.coeff(0) != 0 && I.nu % 2 == 0 && I.nu <= n - 1;
                for (int j = 0; j < I.nu; ++j) shape = shape && I.q.coeff(j) == 0;
                if (I.nu < n - 1)
                    shape = shape && I.p.coeff(0) * I.q.coeff(I.nu + 1) - I.p.coeff(1) * I.q.coeff(I.nu) != 0;
                t.check(shape, "reduced pair invariants for " + at);
                t.check(poly_gcd(I.p, I.q) == CurvePoly::monomial(K, 0), "p, q coprime for " + at);

                // Same ideal: generators inside d(p, q), and d p, d q inside (gens).
                const CurvePoly dp = I.content * I.p, dq = I.content * I.q;
                for (const auto& g : gens) t.check(curve_contains_by_solve(I, g), "generator in I for " + at);
                t.check(oracle::in_ideal_span(K, n, gens, dp, 3 * n) &&
                            oracle::in_ideal_span(K, n, gens, dq, 3 * n),
                        "d p, d q in the ideal of the generators for " + at);

                const int hv = conductor_h_solver(I, 2 * n).min_valuation;
                t.check(curve_fitt1(I).even_exp == hv, "Fitt_1 exponent = h-solver valuation for " + at);

                const int nu = I.nu;
                t.check(curve_contains_by_solve(I, dp.shifted(nu + 1)) &&
                            curve_contains_by_solve(I, dq.shifted(nu + 1)),
                        "x^(nu+1) I in I for " + at);
                if (nu >= 2)
                    t.check(!(curve_contains_by_solve(I, dp.shifted(nu - 1)) &&
                              curve_contains_by_solve(I, dq.shifted(nu - 1))),
                            "x^(nu-1) I not in I for " + at);
                t.check(curve_multiplier_ring(I) == nu, "rho(I) exponent for " + at);

                const ConductorReadings cr = conductor_readings(I);
                t.check(cr.fitt_equals_r_colon_rho, "Fitt_1(I) = (R : rho(I)) for " + at);
                literal_agree += cr.fitt_equals_rho_colon_r ? 1 : 0;
                ++total;

                if (!K.is_rational()) {
                    const Int got = curve_unit_group_order(I);
                    const Int want = oracle::truncated_unit_count(5, (n - nu - 1) / 2);
                    t.check(got == want, "unit group order = brute force for " + at + ": " + got.get_str() +
                                             " vs " + want.get_str());
                }
            }
        }
    }
    t.check(since(t0) < 60.0, "time limit 60 s");
    return {t.ok(), t.summary(std::to_string(total) + " ideals; literal (rho : R) reading matched Fitt_1 on " +
                              std::to_string(literal_agree))};
}

Outcome vector_reduction(const Options& o) {
    Tally t;
    std::mt19937_64 rng(o.seed + 8);
    for (int len : {3, 4}) {
        for (int i = 0; i < 200; ++i) {
            const Order R(FieldDesc(kCuspFields[i % kCuspFields.size()]), 1 + (i / 7) % 6);
            const QIdeal I = oracle::random_ideal(R, rng);
            const GenPair base = oracle::random_pair(I, rng);
            std::vector<QuadElt> v(len, QuadElt(R.field()));
            v[0] = base.g1();
            v[1] = base.g2();
            // Random elementary moves v_j += r v_k keep v a generating vector.
            for (int s = 0; s < 6; ++s) {
                std::uniform_int_distribution<int> pick(0, len - 1);
                const int j = pick(rng), k = pick(rng);
                if (j != k) v[j] += v[k] * oracle::random_element(R, rng, 3);
            }
            const GenVec vec(I, v);
            const VectorReduction red = reduce_vector(vec);
            const std::string at = "vector " + std::to_string(i) + " of length " + std::to_string(len) +
                                   " over " + I.to_string();
            t.check(oracle::det_laplace(red.sigma) == 1, "det sigma = 1 for " + at);
            const auto image = act(v, red.sigma);
            bool shape = image[0] == red.pair.g1() && image[1] == red.pair.g2();
            for (int j = 2; j < len; ++j) shape = shape && image[j].is_zero();
            t.check(shape, "v sigma = (g1, g2, 0, ...) for " + at);
            const auto sb = oracle::standard_basis(R, {red.pair.g1(), red.pair.g2()});
            t.check(sb.a == I.a() && sb.d == I.d() && sb.e == I.e(), "(g1, g2) generates I for " + at);
        }
    }
    return {t.ok(), t.summary("400 vectors")};
}

Outcome epsilon(const Options& o) {
    Tally t;
    std::mt19937_64 rng(o.seed + 9);
    int ideals = 0;
    for (std::int64_t m : kCuspFields) {
        for (std::int64_t f = 1; f <= 8; ++f) {
            const Order R(FieldDesc(m), f);
            for (const QIdeal& I : tested_ideals(R, rng, 2)) {
                const std::int64_t fp = oracle::multiplier_conductor_by_membership(I);
                const Int n0 = Int(static_cast<long>(f / fp));
                bool neg = false;
                if (m > 0) {
                    auto u = oracle::pell_unit(Order(FieldDesc(m), fp), 100000);
                    t.check(u.has_value(), "Pell oracle found a unit for " + tag(m, fp));
                    neg = u && norm(*u) == -1;
                    t.check(u && UnitCache::global().get(Order(FieldDesc(m), fp)).fundamental == *u,
                            "fundamental unit = Pell oracle unit for " + tag(m, fp));
                }
                t.check(UnitCache::global().get(Order(FieldDesc(m), fp)).has_norm_minus_one == neg,
                        "norm -1 unit detection for " + tag(m, fp));
                const auto eps = epsilon_subgroup(I);
                const bool has_minus_one = n0 > 2 && std::find(eps.begin(), eps.end(), n0 - 1) != eps.end();
                t.check(has_minus_one == (neg && n0 > 2), "-1 in eps(I) iff norm -1 unit and f/f' > 2 for " +
                                                              I.to_string() + " in " + R.to_string());
                t.check(eps.size() == (neg && n0 > 2 ? 2u : 1u), "|eps(I)| for " + I.to_string());
                t.check(orbit_count_sl2_mod_units(I) * Int(static_cast<long>(eps.size())) == phi_by_count(n0),
                        "orbit count * |eps(I)| = phi(f/f') for " + I.to_string() + " in " + R.to_string());
                ++ideals;
            }
        }
    }
    return {t.ok(), t.summary(std::to_string(ideals) + " ideals")};
}

using CriterionFn = Outcome (*)(const Options&);

struct Entry {
    const char* name;
    CriterionFn fn;
};

const Entry kCriteria[kCriterionCount] = {
    {"Maass consistency", maass},
    {"cusp formula vs class enumeration", formula_vs_direct},
    {"Fitting ideal triple identity", fitting_triple},
    {"determinant invariance and witnesses", determinant_invariance},
    {"surjectivity of the determinant class map", surjectivity},
    {"Picard formula vs brute force", picard_vs_brute},
    {"curve ring invariants", curve_ring},
    {"vector reduction", vector_reduction},
    {"epsilon subgroup", epsilon},
};

}  // namespace

const char* to_string(Status status) {
    switch (status) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

const char* criterion_name(int id) {
    if (id < 1 || id > kCriterionCount) throw UsageError("no criterion " + std::to_string(id));
    return kCriteria[id - 1].name;
}

Result run_criterion(int id, const Options& opts) {
    Result r{id, criterion_name(id), Status::Fail, 0, ""};
    const auto t0 = Clock::now();
    try {
        const Outcome out = kCriteria[id - 1].fn(opts);
        r.status = out.ok ? Status::Pass : Status::Fail;
        r.detail = out.detail;
    } catch (const Inconclusive& e) {
        r.status = Status::Skipped;
        r.detail = std::string("inconclusive: ") + e.what();
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t0);
    return r;
}

std::vector<Result> run_all(const Options& opts) {
    std::vector<Result> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
        out.push_back(run_criterion(id, opts));
    }
    return out;
}

}  // namespace cuspidal::acceptance
