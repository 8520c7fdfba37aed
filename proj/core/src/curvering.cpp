#include "cuspidal/curvering.hpp"

#include "cuspidal/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cuspidal {

namespace {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

bool is_prime(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const CoeffField& F, Mat& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Rat inv = F.inverse(rows[r][c]);
        for (auto& v : rows[r]) v = F.reduce(v * inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rat k = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = F.reduce(rows[i][j] - k * rows[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t rank_of(const CoeffField& F, Mat rows, std::size_t ncols) {
    return row_reduce(F, rows, ncols).size();
}

// Basis of {z : A z = 0}.
Mat nullspace(const CoeffField& F, Mat A, std::size_t ncols) {
    const auto pivots = row_reduce(F, A, ncols);
    Mat out;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        Vec z(ncols, Rat(0));
        z[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) z[pivots[i]] = F.reduce(-A[i][free]);
        out.push_back(std::move(z));
    }
    return out;
}

bool in_span(const CoeffField& F, const Mat& rows, const Vec& v) {
    Mat with = rows;
    with.push_back(v);
    return rank_of(F, rows, v.size()) == rank_of(F, with, v.size());
}

bool same_span(const CoeffField& F, const Mat& a, const Mat& b, std::size_t ncols) {
    Mat both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = rank_of(F, both, ncols);
    return rank_of(F, a, ncols) == r && rank_of(F, b, ncols) == r;
}

Vec coeff_vector(const CurvePoly& p, std::size_t len) {
    Vec v(len, Rat(0));
    for (std::size_t i = 0; i < len; ++i) v[i] = p.coeff(i);
    return v;
}

// Truncated power series in y over F, length k.
Vec series_mul(const CoeffField& F, const Vec& a, const Vec& b) {
    const std::size_t k = a.size();
    Vec out(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < k; ++j) out[i + j] = F.reduce(out[i + j] + a[i] * b[j]);
    }
    return out;
}

Vec series_inverse(const CoeffField& F, const Vec& a) {
    const std::size_t k = a.size();
    Vec out(k, Rat(0));
    const Rat inv0 = F.inverse(a[0]);
    out[0] = inv0;
    for (std::size_t i = 1; i < k; ++i) {
        Rat s = 0;
        for (std::size_t j = 1; j <= i; ++j) s += a[j] * out[i - j];
        out[i] = F.reduce(-s * inv0);
    }
    return out;
}

std::size_t series_valuation(const Vec& a) {
    std::size_t i = 0;
    while (i < a.size() && a[i] == 0) ++i;
    return i;
}

CurvePoly x_pow(const CoeffField& F, std::size_t k) { return CurvePoly::monomial(F, k); }

}  // namespace

CoeffField CoeffField::prime(std::int64_t q) {
    if (!is_prime(q)) throw UsageError(std::to_string(q) + " is not prime");
    return CoeffField(q);
}

CoeffField CoeffField::parse(std::string_view text) {
    if (text == "rational" || text == "Q") return rational();
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
        std::int64_t q = 0;
        for (char c : text.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || q > 1'000'000'000)
                throw UsageError("bad field: " + std::string(text));
            q = q * 10 + (c - '0');
        }
        return prime(q);
    }
    throw UsageError("bad field: " + std::string(text) + " (expected rational or f<q>)");
}

Rat CoeffField::reduce(const Rat& x) const {
    if (q_ == 0) return x;
    const Int q = Int(static_cast<long>(q_));
    Int den = mod(x.get_den(), q);
    if (den == 0) throw UsageError("denominator " + x.get_den().get_str() + " vanishes mod " + q.get_str());
    Int inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
    return Rat(mod(x.get_num() * inv, q));
}

Rat CoeffField::inverse(const Rat& x) const {
    if (x == 0) throw UsageError("inverse of zero");
    return reduce(Rat(1) / x);
}

std::string CoeffField::to_string() const {
    return q_ == 0 ? "rational" : "f" + std::to_string(q_);
}

CurvePoly::CurvePoly(const CoeffField& field, std::vector<Rat> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    normalize();
}

CurvePoly CurvePoly::monomial(const CoeffField& field, std::size_t degree, const Rat& c) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return CurvePoly(field, std::move(v));
}

void CurvePoly::normalize() {
    for (auto& c : coeffs_) c = field_.reduce(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t CurvePoly::valuation() const {
    if (is_zero()) throw UsageError("valuation of the zero polynomial");
    std::size_t i = 0;
    while (coeffs_[i] == 0) ++i;
    return i;
}

CurvePoly CurvePoly::operator+(const CurvePoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return CurvePoly(field_, std::move(v));
}

CurvePoly CurvePoly::operator-() const { return scaled(Rat(-1)); }

CurvePoly CurvePoly::operator-(const CurvePoly& o) const { return *this + (-o); }

CurvePoly CurvePoly::operator*(const CurvePoly& o) const {
    if (is_zero() || o.is_zero()) return CurvePoly(field_);
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return CurvePoly(field_, std::move(v));
}

CurvePoly CurvePoly::scaled(const Rat& c) const {
    std::vector<Rat> v = coeffs_;
    for (auto& x : v) x *= c;
    return CurvePoly(field_, std::move(v));
}

CurvePoly CurvePoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Rat> v(k, Rat(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return CurvePoly(field_, std::move(v));
}

CurvePoly CurvePoly::truncated(std::size_t k) const {
    std::vector<Rat> v(coeffs_.begin(), coeffs_.begin() + std::min(k, coeffs_.size()));
    return CurvePoly(field_, std::move(v));
}

CurvePoly CurvePoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inverse(coeffs_.back()));
}

std::pair<CurvePoly, CurvePoly> CurvePoly::divmod(const CurvePoly& d) const {
    if (d.is_zero()) throw UsageError("division by the zero polynomial");
    CurvePoly r = *this;
    std::vector<Rat> qv(std::max<long>(degree() - d.degree() + 1, 0), Rat(0));
    const Rat lead_inv = field_.inverse(d.coeffs_.back());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        const Rat c = field_.reduce(r.coeffs_.back() * lead_inv);
        qv[shift] = c;
        r = r - d.shifted(shift).scaled(c);
    }
    return {CurvePoly(field_, std::move(qv)), r};
}

std::string CurvePoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

CurvePoly poly_gcd(const CurvePoly& a, const CurvePoly& b) {
    CurvePoly u = a, v = b;
    while (!v.is_zero()) {
        CurvePoly r = u.divmod(v).second;
        u = v;
        v = r;
    }
    return u.monic();
}

CurvePoly parse_curve_poly(const CoeffField& field, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw UsageError("empty polynomial");
    auto parse_rat = [&](const std::string& t) -> Rat {
        if (t.empty() || t.find_first_not_of("0123456789/") != std::string::npos ||
            t.front() == '/' || t.back() == '/' || std::count(t.begin(), t.end(), '/') > 1)
            throw UsageError("bad coefficient '" + t + "' in " + std::string(text));
        Rat r(t);
        if (r.get_den() == 0) throw UsageError("zero denominator in " + std::string(text));
        r.canonicalize();
        return r;
    };
    std::vector<Rat> coeffs;
    auto add = [&](std::size_t deg, const Rat& c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
        coeffs[deg] += c;
    };
    if (s.front() == '[') {
        if (s.back() != ']') throw UsageError("unterminated coefficient list: " + std::string(text));
        std::string body = s.substr(1, s.size() - 2);
        std::size_t deg = 0, start = 0;
        if (body.empty()) return CurvePoly(field);
        while (true) {
            std::size_t comma = body.find(',', start);
            std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            bool neg = !tok.empty() && tok[0] == '-';
            Rat c = parse_rat(neg ? tok.substr(1) : tok);
            add(deg++, neg ? Rat(-c) : c);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return CurvePoly(field, std::move(coeffs));
    }
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw UsageError("expected + or - in " + std::string(text));
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.empty()) throw UsageError("empty term in " + std::string(text));
        Rat c = 1;
        std::size_t deg = 0;
        std::size_t xpos = term.find('x');
        if (xpos == std::string::npos) {
            c = parse_rat(term);
        } else {
            std::string head = term.substr(0, xpos);
            std::string tail = term.substr(xpos + 1);
            if (!head.empty()) {
                if (head.back() != '*') throw UsageError("expected '*' before x in " + std::string(text));
                c = parse_rat(head.substr(0, head.size() - 1));
            }
            deg = 1;
            if (!tail.empty()) {
                if (tail[0] != '^' || tail.size() < 2 ||
                    tail.find_first_not_of("0123456789", 1) != std::string::npos || tail.size() > 7)
                    throw UsageError("bad exponent in " + std::string(text));
                deg = std::stoul(tail.substr(1));
            }
        }
        add(deg, sign < 0 ? Rat(-c) : c);
    }
    return CurvePoly(field, std::move(coeffs));
}

bool in_curve_ring(const CurvePoly& p, int n) {
    for (std::size_t i = 1; i < p.coeffs().size() && static_cast<int>(i) < n; i += 2)
        if (p.coeffs()[i] != 0) return false;
    return true;
}

bool CurveIdeal::contains(const CurvePoly& g) const {
    if (g.is_zero()) return true;
    auto [quot, rem] = g.divmod(content);
    if (!rem.is_zero()) return false;
    const std::size_t N = static_cast<std::size_t>(n - 1);
    Mat rows;
    for (std::size_t j = 0; 2 * j < N; ++j) {
        rows.push_back(coeff_vector(p.shifted(2 * j), N));
        if (!q.is_zero()) rows.push_back(coeff_vector(q.shifted(2 * j), N));
    }
    return in_span(field, rows, coeff_vector(quot, N));
}

CurveIdeal curve_reduce_pair(const CoeffField& F, int n, const std::vector<CurvePoly>& gens) {
    if (n < 3 || n % 2 == 0) throw UsageError("n must be odd and >= 3, got " + std::to_string(n));
    std::vector<CurvePoly> nz;
    for (const auto& g : gens) {
        if (!(g.field() == F)) throw UsageError("generator over a different field");
        if (!in_curve_ring(g, n))
            throw UsageError(g.to_string() + " is not in K[x^2, x^" + std::to_string(n) + "]");
        if (!g.is_zero()) nz.push_back(g);
    }
    if (nz.empty()) throw ZeroIdealError();

    CurvePoly d(F);
    for (const auto& g : nz) d = poly_gcd(d, g);

    // J = I/d contains x^(n-1) K[x]; work in K[x]/x^(n-1) = B + x B with
    // B = K[y]/y^k, y = x^2.
    const std::size_t N = static_cast<std::size_t>(n - 1), k = N / 2;
    std::vector<std::pair<Vec, Vec>> rows;
    for (const auto& g : nz) {
        auto [quot, rem] = g.divmod(d);
        CUSPIDAL_CHECK(rem.is_zero(), "content does not divide a generator");
        Vec e(k, Rat(0)), o(k, Rat(0));
        for (std::size_t j = 0; j < k; ++j) {
            e[j] = quot.coeff(2 * j);
            o[j] = quot.coeff(2 * j + 1);
        }
        rows.emplace_back(std::move(e), std::move(o));
    }
    auto pivot = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.first[0] != 0; });
    CUSPIDAL_CHECK(pivot != rows.end(), "I/d has no element with nonzero constant term");
    std::swap(*pivot, rows.front());
    const Vec e_inv = series_inverse(F, rows.front().first);
    Vec op = series_mul(F, e_inv, rows.front().second);

    // Eliminate the even parts; the odd parts left over generate y^v B.
    std::size_t v = k;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const Vec t = series_mul(F, rows[i].first, op);
        Vec o = rows[i].second;
        for (std::size_t j = 0; j < k; ++j) o[j] = F.reduce(o[j] - t[j]);
        v = std::min(v, series_valuation(o));
    }
    // Odd part of p reduced modulo y^v, the ideal of q's odd parts.
    std::vector<Rat> pc(N, Rat(0));
    pc[0] = 1;
    for (std::size_t j = 0; j < v; ++j) pc[2 * j + 1] = op[j];
    CurvePoly p(F, std::move(pc));
    CurveIdeal out{F, n, d, p, CurvePoly(F), 0};
    if (v < k) {
        out.nu = static_cast<int>(2 * v);
        out.q = x_pow(F, 2 * v + 1);
    } else {
        out.nu = n - 1;
        if (p.degree() > 0) out.q = x_pow(F, N);
    }
    for (const auto& g : nz) CUSPIDAL_CHECK(out.contains(g), "reduced pair misses a generator");
    return out;
}

bool curve_contains_by_solve(const CurveIdeal& I, const CurvePoly& g) {
    if (g.is_zero()) return true;
    const CurvePoly dp = I.content * I.p;
    const CurvePoly dq = I.content * I.q;
    // a, b can be taken of degree <= deg g + 2n + deg p + deg q: reduce modulo
    // x^(n-1) first, then clear the remaining multiple of x^(n-1) with a
    // Bezout relation for the coprime pair (p, q).
    const long D = std::max<long>(g.degree(), 0) + 2L * I.n + std::max<long>(I.p.degree(), 0) +
                   std::max<long>(I.q.degree(), 0);
    const std::size_t len = static_cast<std::size_t>(D + std::max(dp.degree(), dq.degree()) + 1);
    if (g.degree() >= static_cast<long>(len)) return false;
    Mat rows;
    for (long i = 0; i <= D; ++i) {
        if (i % 2 == 1 && i < I.n) continue;
        rows.push_back(coeff_vector(dp.shifted(i), len));
        if (!dq.is_zero()) rows.push_back(coeff_vector(dq.shifted(i), len));
    }
    return in_span(I.field, rows, coeff_vector(g, len));
}

CurveFitt1 curve_fitt1(const CurveIdeal& I) { return CurveFitt1{I.n - I.nu - 1, I.n - 1}; }

int curve_multiplier_ring(const CurveIdeal& I) {
    const CurvePoly dp = I.content * I.p, dq = I.content * I.q;
    for (int e = 1; e <= I.n; e += 2) {
        if (!I.contains(dp.shifted(e)) || !I.contains(dq.shifted(e))) continue;
        CUSPIDAL_CHECK(e - 1 == I.nu, "multiplier ring disagrees with nu");
        return I.nu;
    }
    throw InternalError("x^n I is not contained in I");
}

HSolution conductor_h_solver(const CurveIdeal& I, int bound) {
    if (bound < I.n - 1) throw UsageError("h-solver bound must be at least n - 1");
    const std::size_t cols = static_cast<std::size_t>(bound + 1);
    Mat A;
    for (const CurvePoly* g : {&I.p, &I.q}) {
        if (g->is_zero()) continue;
        // coefficient of x^i in h g for odd i < n
        for (int i = 1; i < I.n; i += 2) {
            Vec row(cols, Rat(0));
            for (int j = 0; j <= i && j <= bound; ++j) row[j] = g->coeff(i - j);
            A.push_back(std::move(row));
        }
    }
    Mat basis = nullspace(I.field, A, cols);
    Mat echelon = basis;
    const auto pivots = row_reduce(I.field, echelon, cols);
    CUSPIDAL_CHECK(!pivots.empty(), "h-solver found no solutions");
    HSolution out{{}, static_cast<int>(pivots.front())};
    for (auto& z : basis) out.basis.emplace_back(I.field, std::move(z));
    CUSPIDAL_CHECK(out.min_valuation == I.n - I.nu - 1,
                   "minimal valuation of the h-solutions is not n - nu - 1");
    return out;
}

ConductorReadings conductor_readings(const CurveIdeal& I) {
    const std::size_t N = static_cast<std::size_t>(I.n - 1);
    const CoeffField& F = I.field;
    // Everything contains x^(n-1) K[x]; compare images in K[x]/x^(n-1).
    Mat fitt;
    for (std::size_t e = static_cast<std::size_t>(I.n - I.nu - 1); e < N; e += 2)
        fitt.push_back(coeff_vector(x_pow(F, e), N));

    // r in R with r x^(nu+1) in R; rho = K[x^2] + K[x^2] x^(nu+1).
    Mat cons;
    for (std::size_t i = 1; i < N; i += 2) {
        Vec row(N, Rat(0));
        row[i] = 1;
        cons.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < static_cast<std::size_t>(I.n); i += 2) {
        if (i < static_cast<std::size_t>(I.nu + 1)) continue;
        const std::size_t j = i - static_cast<std::size_t>(I.nu + 1);
        if (j >= N) continue;
        Vec row(N, Rat(0));
        row[j] = 1;
        cons.push_back(std::move(row));
    }
    const Mat r_colon_rho = nullspace(F, cons, N);

    Mat rho;
    for (std::size_t e = 0; e < N; ++e)
        if (e % 2 == 0 || e >= static_cast<std::size_t>(I.nu)) rho.push_back(coeff_vector(x_pow(F, e), N));

    return ConductorReadings{same_span(F, fitt, r_colon_rho, N), same_span(F, fitt, rho, N)};
}

Int curve_unit_group_order(const CurveIdeal& I) {
    const int f = I.nu + 1;
    if (f == I.n) return 1;
    if (I.field.is_rational())
        throw UsageError("the unit group of R/Fitt_1(I) is infinite over Q: Q^x x (Q,+)^" +
                         std::to_string((I.n - f) / 2 - 1));
    Int q = Int(static_cast<long>(I.field.characteristic()));
    Int out;
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>((I.n - f) / 2 - 1));
    return out * (q - 1);
}

}  // namespace cuspidal
