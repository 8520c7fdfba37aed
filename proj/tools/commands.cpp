#include "commands.hpp"

#include "acceptance.hpp"

#include "cuspidal/classnum.hpp"
#include "cuspidal/curvering.hpp"
#include "cuspidal/cusps.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/units.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace cuspidal::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
        cur.clear();
    };
    for (char c : text) {
        if (c == ';') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return out;
}

std::vector<QuadElt> parse_elements(const FieldDesc& F, const std::string& text, const char* flag) {
    std::vector<QuadElt> out;
    for (const auto& s : split_list(text)) out.push_back(parse_element(F, s));
    if (out.empty()) throw UsageError(std::string(flag) + " needs at least one element");
    return out;
}

Order order_of(const Args& a) { return Order(FieldDesc(a.m), a.f); }

Json order_inputs(const Args& a) {
    Json j;
    j["m"] = std::to_string(a.m);
    j["f"] = std::to_string(a.f);
    return j;
}

Json basis_json(const QIdeal& I) {
    const auto p = I.standard_pair();
    return Json::array({p[0].to_string(), p[1].to_string()});
}

std::string s(const Int& x) { return x.get_str(); }
std::string s(std::int64_t x) { return std::to_string(x); }

QIdeal ideal_from_args(const Args& a, const Order& R) {
    return QIdeal::from_generators(R, parse_elements(R.field(), a.gens, "--gens"));
}

void add(Report& r, const std::string& name, bool ok) {
    r.assertions.push_back({name, ok ? "pass" : "fail"});
    if (!ok) r.exit_code = 3;
}

void skip(Report& r, const std::string& name) { r.assertions.push_back({name, "skipped"}); }

}  // namespace

Json to_json(const Report& r) {
    Json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    Json as = Json::array();
    for (const auto& x : r.assertions) as.push_back({{"name", x.name}, {"status", x.status}});
    j["assertions"] = as;
    return j;
}

Report cmd_cusps(const Args& a, const SearchConfig& cfg) {
    const Order R = order_of(a);
    Report r{"cusps", order_inputs(a)};
    const CuspReport c = cusp_count(R, cfg);
    std::ostringstream os;
    os << "cusps of " << R.to_string() << ": " << s(c.total) << "\n";
    os << std::setw(6) << "f'" << std::setw(8) << "phi" << std::setw(5) << "eps" << std::setw(8) << "|Pic|"
       << std::setw(14) << "contribution" << "\n";
    Json rows = Json::array();
    for (const auto& row : c.rows) {
        os << std::setw(6) << row.f_prime << std::setw(8) << s(row.phi) << std::setw(5) << row.eps
           << std::setw(8) << s(row.pic) << std::setw(14) << s(row.contribution) << "\n";
        rows.push_back({{"f_prime", s(row.f_prime)},
                        {"phi", s(row.phi)},
                        {"eps", s(static_cast<std::int64_t>(row.eps))},
                        {"pic", s(row.pic)},
                        {"contribution", s(row.contribution)}});
    }
    r.result["total"] = s(c.total);
    r.result["rows"] = rows;
    try {
        const Int direct = cusp_count_direct(R, cfg);
        r.result["direct"] = s(direct);
        os << "class-by-class count: " << s(direct) << "\n";
        add(r, "cusp_count = cusp_count_direct", direct == c.total);
    } catch (const Inconclusive& e) {
        os << "class-by-class count: skipped (" << e.what() << ")\n";
        skip(r, "cusp_count = cusp_count_direct");
    }
    r.text = os.str();
    return r;
}

Report cmd_pic(const Args& a, const SearchConfig& cfg) {
    const Order R = order_of(a);
    Report r{"pic", order_inputs(a)};
    const PicSize p = picard_order(R, cfg);
    std::ostringstream os;
    os << "|Pic(" << R.to_string() << ")| = " << s(p.h) << " (" << to_string(p.method) << ")\n";
    r.result["h"] = s(p.h);
    r.result["method"] = to_string(p.method);
    r.result["h_maximal"] = s(class_number_maximal(R.field(), cfg).h);
    if (!R.field().is_real()) {
        const Int forms = count_reduced_forms(R.disc());
        r.result["reduced_forms"] = s(forms);
        os << "reduced forms of disc " << s(R.disc()) << ": " << s(forms) << "\n";
        add(r, "picard_order = reduced form count", forms == p.h);
    }
    try {
        const Int bf = brute_force_pic(R, cfg).h;
        r.result["brute_force"] = s(bf);
        os << "invertible ideal classes: " << s(bf) << "\n";
        add(r, "picard_order = brute_force_pic", bf == p.h);
    } catch (const Inconclusive& e) {
        os << "invertible ideal classes: skipped (" << e.what() << ")\n";
        skip(r, "picard_order = brute_force_pic");
    }
    r.text = os.str();
    return r;
}

Report cmd_unit(const Args& a, const SearchConfig&) {
    const Order R = order_of(a);
    Report r{"unit", order_inputs(a)};
    const UnitInfo u = UnitCache::global().get(R);
    const Int index = unit_index(R, Order(R.field(), 1));
    std::ostringstream os;
    r.result["real"] = u.real;
    if (u.real) {
        r.result["fundamental"] = u.fundamental.to_string();
        r.result["norm"] = s(norm(u.fundamental));
        os << "fundamental unit of " << R.to_string() << ": " << u.fundamental.to_string() << " (norm "
           << s(norm(u.fundamental)) << ")\n";
    } else {
        Json t = Json::array();
        for (const auto& x : u.torsion) t.push_back(x.to_string());
        r.result["torsion"] = t;
        os << "units of " << R.to_string() << ": " << u.torsion_order << " roots of unity\n";
    }
    r.result["torsion_order"] = s(static_cast<std::int64_t>(u.torsion_order));
    r.result["has_norm_minus_one"] = u.has_norm_minus_one;
    r.result["index_in_maximal"] = s(index);
    os << "norm -1 unit: " << (u.has_norm_minus_one ? "yes" : "no") << "\n";
    os << "[O^x : O_f^x] = " << s(index) << "\n";
    r.text = os.str();
    return r;
}

Report cmd_ideal(const std::string& op, const Args& a, const SearchConfig&) {
    const Order R = order_of(a);
    Report r{"ideal " + op, order_inputs(a)};
    r.inputs["gens"] = a.gens;
    const QIdeal I = ideal_from_args(a, R);
    std::ostringstream os;
    if (op == "std-basis") {
        const FormQ q = norm_form(I);
        r.result["a"] = s(I.a());
        r.result["d"] = s(I.d());
        r.result["e"] = s(I.e());
        r.result["norm"] = s(I.norm());
        r.result["primitive"] = I.is_primitive();
        r.result["basis"] = basis_json(I);
        r.result["form"] = Json::array({s(q.A), s(q.B), s(q.C)});
        os << "I = " << I.to_string() << "  (a=" << s(I.a()) << ", d=" << s(I.d()) << ", e=" << s(I.e())
           << ", N(I)=" << s(I.norm()) << ")\n";
        os << "e*q_I = [" << s(q.A) << ", " << s(q.B) << ", " << s(q.C) << "]\n";
        const QIdeal again = QIdeal::from_generators(R, {I.standard_pair()[0], I.standard_pair()[1]});
        add(r, "standard basis round trip", again == I);
    } else if (op == "fitt1") {
        const QIdeal F = fitt1(I);
        const std::int64_t fp = multiplier_conductor(I);
        r.result["fitt1"] = basis_json(F);
        r.result["f_prime"] = s(fp);
        r.result["index"] = s(a.f / fp);
        os << "Fitt_1(I) = " << F.to_string() << " = Z*" << a.f / fp << " + Z*" << a.f << "*w\n";
        os << "|R/Fitt_1(I)| = f/f' = " << a.f / fp << "\n";
        add(r, "Fitt_1(I) = I I^-1", F.lattice() == I.lattice() * ideal_inverse(I).lattice());
        add(r, "Fitt_1(I) = (R : O_f')", F.lattice() == colon(R.lattice(), R.overorder(fp).lattice()));
        add(r, "|R/Fitt_1(I)| = f/f'", R.lattice().index_of(F.lattice()) == Int(static_cast<long>(a.f / fp)));
    } else if (op == "inverse") {
        const FractionalIdeal inv = ideal_inverse(I);
        r.result["numerator"] = basis_json(inv.numerator);
        r.result["denominator"] = s(inv.den);
        os << "I^-1 = (1/" << s(inv.den) << ") * " << inv.numerator.to_string() << "\n";
        add(r, "I I^-1 = Fitt_1(I)", I.lattice() * inv.lattice() == fitt1(I).lattice());
    } else if (op == "mult-ring") {
        const MultiplierRing mr = multiplier_ring(I);
        r.result["f_prime"] = s(mr.f_prime);
        r.result["content"] = s(mr.content);
        r.result["gcd_a_d_ef"] = s(mr.gcd_adef);
        r.result["invertible"] = mr.f_prime == a.f;
        os << "rho(I) = " << R.overorder(mr.f_prime).to_string() << "  (content(q_I) = " << s(mr.content)
           << ", gcd(a, d, ef) = " << s(mr.gcd_adef) << ")\n";
        add(r, "(I : I) = O_f'", true);
    } else if (op == "norm") {
        r.result["norm"] = s(ideal_norm(I));
        os << "N(I) = " << s(ideal_norm(I)) << "\n";
        add(r, "N(I) = [R : I]", R.lattice().index_of(I.lattice()) == I.norm());
    } else {
        throw UsageError("unknown ideal operation " + op);
    }
    r.text = os.str();
    return r;
}

Report cmd_pair(const std::string& op, const Args& a, const SearchConfig&) {
    const Order R = order_of(a);
    Report r{"pair " + op, order_inputs(a)};
    r.inputs["gens"] = a.gens;
    r.inputs["gens2"] = a.gens2;
    const auto g = parse_elements(R.field(), a.gens, "--gens");
    const auto h = parse_elements(R.field(), a.gens2, "--gens2");
    if (g.size() != 2 || h.size() != 2) throw UsageError("--gens and --gens2 must each hold two elements");
    const QIdeal I = QIdeal::from_generators(R, g);
    const GenPair m(I, g[0], g[1]);
    const GenPair m2(I, h[0], h[1]);
    const DetClass d = det_pair(m, m2);
    std::ostringstream os;
    os << "I = " << I.to_string() << ", R/Fitt_1(I) = Z/" << s(d.modulus) << "\n";
    r.result["ideal"] = basis_json(I);
    r.result["det"] = {{"value", s(d.value)}, {"modulus", s(d.modulus)}};
    if (op == "det") {
        os << "det class: " << s(d.value) << " mod " << s(d.modulus) << "\n";
    } else if (op == "equiv") {
        r.result["equivalent"] = d.is_one();
        os << (d.is_one() ? "SL_2-equivalent" : "not SL_2-equivalent") << " (det class " << s(d.value) << " mod "
           << s(d.modulus) << ")\n";
    } else if (op == "witness") {
        const Mat2 B = sl2_witness(m, m2);
        r.result["matrix"] = Json::array({Json::array({B.a11.to_string(), B.a12.to_string()}),
                                          Json::array({B.a21.to_string(), B.a22.to_string()})});
        os << "B = [[" << B.a11 << ", " << B.a12 << "], [" << B.a21 << ", " << B.a22 << "]]\n";
        add(r, "det B = 1", B.det() == QuadElt(R.field(), 1));
        const GenPair img = act(m, B);
        add(r, "m B = m'", img.g1() == m2.g1() && img.g2() == m2.g2());
    } else {
        throw UsageError("unknown pair operation " + op);
    }
    r.text = os.str();
    return r;
}

Report cmd_vec_reduce(const Args& a, const SearchConfig&) {
    const Order R = order_of(a);
    Report r{"vec reduce", order_inputs(a)};
    r.inputs["gens"] = a.gens;
    const auto v = parse_elements(R.field(), a.gens, "--gens");
    if (v.size() < 3) throw UsageError("vec reduce needs at least three entries");
    const QIdeal I = QIdeal::from_generators(R, v);
    const VectorReduction red = reduce_vector(GenVec(I, v));
    Json sigma = Json::array();
    std::ostringstream os;
    os << "(" << red.pair.g1() << ", " << red.pair.g2();
    for (std::size_t j = 2; j < v.size(); ++j) os << ", 0";
    os << ") = v * sigma, sigma =\n";
    for (std::size_t i = 0; i < red.sigma.rows(); ++i) {
        Json row = Json::array();
        os << "  [";
        for (std::size_t j = 0; j < red.sigma.cols(); ++j) {
            row.push_back(s(red.sigma(i, j)));
            os << (j ? " " : "") << std::setw(4) << s(red.sigma(i, j));
        }
        os << "]\n";
        sigma.push_back(row);
    }
    r.result["pair"] = Json::array({red.pair.g1().to_string(), red.pair.g2().to_string()});
    r.result["sigma"] = sigma;
    add(r, "det sigma = 1", determinant(red.sigma) == 1);
    const auto img = act(v, red.sigma);
    add(r, "v sigma = (g1, g2, 0, ...)",
        std::all_of(img.begin() + 2, img.end(), [](const QuadElt& x) { return x.is_zero(); }));
    r.text = os.str();
    return r;
}

Report cmd_curve(const std::string& op, const Args& a, const SearchConfig&) {
    const CoeffField K = CoeffField::parse(a.field);
    Report r{"curve " + op};
    r.inputs["field"] = K.to_string();
    r.inputs["n"] = s(static_cast<std::int64_t>(a.n));
    r.inputs["gens"] = a.gens;
    std::vector<CurvePoly> gens;
    for (const auto& t : split_list(a.gens)) gens.push_back(parse_curve_poly(K, t));
    if (gens.empty()) throw UsageError("--gens needs at least one polynomial");
    const CurveIdeal I = curve_reduce_pair(K, a.n, gens);
    std::ostringstream os;
    const std::string ring = "K[x^2, x^" + std::to_string(a.n) + "]";
    if (op == "reduce") {
        r.result["content"] = I.content.to_string();
        r.result["p"] = I.p.to_string();
        r.result["q"] = I.q.to_string();
        r.result["nu"] = s(static_cast<std::int64_t>(I.nu));
        os << "I = (" << I.content.to_string() << ") * (R*(" << I.p.to_string() << ") + R*(" << I.q.to_string()
           << ")), nu = " << I.nu << ", R = " << ring << "\n";
        bool all = true;
        for (const auto& g : gens) all = all && curve_contains_by_solve(I, g);
        add(r, "generators lie in d(Rp + Rq)", all);
    } else if (op == "fitt1") {
        const CurveFitt1 F = curve_fitt1(I);
        r.result["even_exp"] = s(static_cast<std::int64_t>(F.even_exp));
        r.result["full_exp"] = s(static_cast<std::int64_t>(F.full_exp));
        os << "Fitt_1(I) = K[x^2] x^" << F.even_exp << " + K[x] x^" << F.full_exp << "\n";
        add(r, "even exponent = minimal h-solver valuation",
            conductor_h_solver(I, 2 * a.n).min_valuation == F.even_exp);
    } else if (op == "mult-ring") {
        const int nu = curve_multiplier_ring(I);
        const ConductorReadings cr = conductor_readings(I);
        r.result["nu"] = s(static_cast<std::int64_t>(nu));
        r.result["fitt1_equals_R_colon_rho"] = cr.fitt_equals_r_colon_rho;
        r.result["fitt1_equals_rho_colon_R"] = cr.fitt_equals_rho_colon_r;
        os << "rho(I) = K[x^2] + K[x] x^" << nu << "\n";
        os << "Fitt_1(I) = (R : rho(I)): " << (cr.fitt_equals_r_colon_rho ? "yes" : "no") << "\n";
        os << "Fitt_1(I) = (rho(I) : R): " << (cr.fitt_equals_rho_colon_r ? "yes" : "no") << "\n";
        add(r, "smallest odd e with x^e I in I is nu + 1", true);
        add(r, "Fitt_1(I) = (R : rho(I))", cr.fitt_equals_r_colon_rho);
    } else if (op == "units") {
        const Int order = curve_unit_group_order(I);
        const int f = I.nu + 1;
        r.result["order"] = s(order);
        r.result["f"] = s(static_cast<std::int64_t>(f));
        os << "|(R/Fitt_1(I))^x| = " << s(order) << "  (f = " << f << ")\n";
    } else {
        throw UsageError("unknown curve operation " + op);
    }
    r.text = os.str();
    return r;
}

Report cmd_selftest(const Args& a, const SearchConfig& cfg) {
    acceptance::Options opts;
    opts.seed = a.seed;
    opts.cfg = cfg;
    opts.only = a.only;
    if (a.inject_wrong_pic)
        opts.pic_override = [](const Order& R, const SearchConfig& c) {
            PicSize p = picard_order(R, c);
            p.h += 1;
            return p;
        };
    Report r{"selftest"};
    r.inputs["seed"] = std::to_string(a.seed);
    r.inputs["inject_wrong_pic"] = a.inject_wrong_pic;

    std::vector<int> ids;
    for (int id = 1; id <= acceptance::kCriterionCount; ++id)
        if (a.only.empty() || std::find(a.only.begin(), a.only.end(), id) != a.only.end()) ids.push_back(id);
    std::vector<acceptance::Result> results;
    if (a.jobs > 1) {
        std::vector<std::future<acceptance::Result>> futs;
        for (int id : ids) futs.push_back(std::async(std::launch::async, acceptance::run_criterion, id, opts));
        for (auto& fu : futs) results.push_back(fu.get());
    } else {
        for (int id : ids) results.push_back(acceptance::run_criterion(id, opts));
    }

    std::ostringstream os;
    Json crit = Json::array();
    int failed = 0, skipped = 0;
    for (const auto& res : results) {
        const std::string st = acceptance::to_string(res.status);
        os << "[" << st << "] " << res.id << " " << res.name << " (" << std::fixed << std::setprecision(2)
           << res.seconds << " s): " << res.detail << "\n";
        crit.push_back({{"id", std::to_string(res.id)},
                        {"name", res.name},
                        {"status", st},
                        {"seconds", res.seconds},
                        {"detail", res.detail}});
        std::string lower = st;
        std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
        r.assertions.push_back({res.name, lower});
        failed += res.status == acceptance::Status::Fail;
        skipped += res.status == acceptance::Status::Skipped;
    }
    r.result["criteria"] = crit;
    r.result["failed"] = std::to_string(failed);
    r.result["skipped"] = std::to_string(skipped);
    if (skipped) std::cerr << "warning: " << skipped << " criteria skipped as inconclusive\n";
    r.exit_code = failed ? 3 : 0;
    r.text = os.str();
    return r;
}

}  // namespace cuspidal::cli
