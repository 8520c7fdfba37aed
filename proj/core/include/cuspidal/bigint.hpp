#ifndef CUSPIDAL_BIGINT_HPP_
#define CUSPIDAL_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cuspidal {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize by itself.
inline Rat make_rat(const Int& n, const Int& d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor division and nonnegative remainder.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_squarefree(std::int64_t m) {
    if (m < 0) m = -m;
    for (std::int64_t p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

inline std::int64_t to_i64(const Int& x) {
    return static_cast<std::int64_t>(x.get_si());
}

inline std::string str(const Int& x) { return x.get_str(); }
inline std::string str(const Rat& x) { return x.get_str(); }

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace cuspidal

#endif  // CUSPIDAL_BIGINT_HPP_
