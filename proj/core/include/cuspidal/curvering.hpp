#ifndef CUSPIDAL_CURVERING_HPP_
#define CUSPIDAL_CURVERING_HPP_

// Ideals of R = K[x^2, x^n], n >= 3 odd, over K = Q or F_q. A nonzero
// ideal is I = d(x) (R p + R q) with d monic, p(0) != 0 and q = x^(nu+1)
// (or q = 0 / x^(n-1) when nu = n - 1). The conductor x^(n-1) K[x] of R
// lies in I/d, so everything is decided modulo x^(n-1).

#include "cuspidal/bigint.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cuspidal {

class CoeffField {
public:
    static CoeffField rational() { return CoeffField(0); }
    // Throws UsageError unless q is prime.
    static CoeffField prime(std::int64_t q);
    // "rational" or "f<q>"
    static CoeffField parse(std::string_view text);

    bool is_rational() const { return q_ == 0; }
    // 0 for Q
    std::int64_t characteristic() const { return q_; }

    // Canonical representative; over F_q an integer in [0, q). Throws
    // UsageError when a denominator vanishes mod q.
    Rat reduce(const Rat& x) const;
    Rat inverse(const Rat& x) const;

    bool operator==(const CoeffField& o) const { return q_ == o.q_; }
    std::string to_string() const;

private:
    explicit CoeffField(std::int64_t q) : q_(q) {}
    std::int64_t q_;
};

class CurvePoly {
public:
    explicit CurvePoly(const CoeffField& field) : field_(field) {}
    CurvePoly(const CoeffField& field, std::vector<Rat> coeffs);
    static CurvePoly monomial(const CoeffField& field, std::size_t degree, const Rat& c = 1);

    const CoeffField& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for zero
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    // Largest k with x^k | p; throws UsageError on zero.
    std::size_t valuation() const;

    CurvePoly operator+(const CurvePoly& o) const;
    CurvePoly operator-(const CurvePoly& o) const;
    CurvePoly operator*(const CurvePoly& o) const;
    CurvePoly operator-() const;
    CurvePoly scaled(const Rat& c) const;
    // x^k * p
    CurvePoly shifted(std::size_t k) const;
    // p mod x^k
    CurvePoly truncated(std::size_t k) const;
    CurvePoly monic() const;
    // p = quotient * d + remainder
    std::pair<CurvePoly, CurvePoly> divmod(const CurvePoly& d) const;

    bool operator==(const CurvePoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const CurvePoly& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    void normalize();

    CoeffField field_;
    std::vector<Rat> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
CurvePoly poly_gcd(const CurvePoly& a, const CurvePoly& b);

// Grammar: `c0 + c1*x + c2*x^2 - ...` with rational coefficients, or
// `[c0, c1, ...]`.
CurvePoly parse_curve_poly(const CoeffField& field, std::string_view text);

// Membership in K[x^2, x^n]: odd-degree support in {n, n+2, ...}.
bool in_curve_ring(const CurvePoly& p, int n);

struct CurveIdeal {
    CoeffField field;
    int n;
    CurvePoly content;  // d
    CurvePoly p;
    CurvePoly q;
    int nu;

    // Exact test via the span of x^(2j) p, x^(2j) q modulo x^(n-1).
    bool contains(const CurvePoly& g) const;
};

// Throws ZeroIdealError when all gens vanish, UsageError when one lies
// outside R or n is not odd >= 3.
CurveIdeal curve_reduce_pair(const CoeffField& field, int n, const std::vector<CurvePoly>& gens);

// Independent membership test: solves g = a d p + b d q for a, b in R of
// bounded degree.
bool curve_contains_by_solve(const CurveIdeal& I, const CurvePoly& g);

// Fitt_1(I) = K[x^2] x^even_exp + K[x] x^full_exp
struct CurveFitt1 {
    int even_exp;
    int full_exp;
};
CurveFitt1 curve_fitt1(const CurveIdeal& I);

// nu with rho(I) = K[x^2] + K[x] x^nu, checked as (smallest odd e with
// x^e I in I) - 1.
int curve_multiplier_ring(const CurveIdeal& I);

// {h in K[x] : deg h <= bound, h p in R, h q in R}
struct HSolution {
    std::vector<CurvePoly> basis;
    int min_valuation;
};
HSolution conductor_h_solver(const CurveIdeal& I, int bound);

// Compares the computed Fitt_1(I) with (R : rho(I)) = {r in R : r rho(I) in R}
// and with the literal (rho(I) : R) = rho(I).
struct ConductorReadings {
    bool fitt_equals_r_colon_rho;
    bool fitt_equals_rho_colon_r;
};
ConductorReadings conductor_readings(const CurveIdeal& I);

// |(R/Fitt_1(I))^x| = q^((n-f)/2 - 1) (q - 1) with f = nu + 1, and 1 when f = n.
// Throws UsageError over Q unless f = n, naming the group structure.
Int curve_unit_group_order(const CurveIdeal& I);

}  // namespace cuspidal

#endif  // CUSPIDAL_CURVERING_HPP_
