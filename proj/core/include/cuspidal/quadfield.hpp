#ifndef CUSPIDAL_QUADFIELD_HPP_
#define CUSPIDAL_QUADFIELD_HPP_

// Exact arithmetic in the maximal order Z + Z*w of Q(sqrt m), where
// w = sqrt(m) if m != 1 mod 4 and w = (1 + sqrt m)/2 otherwise.

#include "cuspidal/bigint.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cuspidal {

enum class OmegaKind { Sqrt, Half };

class FieldDesc {
public:
    // Throws UsageError unless m is squarefree and m not in {0, 1}.
    explicit FieldDesc(std::int64_t m);

    std::int64_t m() const { return m_; }
    OmegaKind omega_kind() const { return kind_; }
    // Field discriminant: m if m = 1 mod 4, else 4m.
    std::int64_t disc() const { return kind_ == OmegaKind::Half ? m_ : 4 * m_; }
    bool is_real() const { return m_ > 0; }

    // w^2 = sq_const() + trace_omega()*w
    std::int64_t trace_omega() const { return kind_ == OmegaKind::Half ? 1 : 0; }
    std::int64_t sq_const() const { return kind_ == OmegaKind::Half ? (m_ - 1) / 4 : m_; }
    // N(w) = -sq_const()
    std::int64_t norm_omega() const { return -sq_const(); }

    // Real embeddings of w (sqrt m > 0); long double, used only for bounds.
    long double omega_real() const;
    long double omega_conj_real() const;

    bool operator==(const FieldDesc& o) const { return m_ == o.m_; }
    bool operator!=(const FieldDesc& o) const { return m_ != o.m_; }

private:
    std::int64_t m_;
    OmegaKind kind_;
};

// a + b*w
class QuadElt {
public:
    explicit QuadElt(const FieldDesc& field) : field_(field) {}
    QuadElt(const FieldDesc& field, Int a, Int b = 0)
        : field_(field), a_(std::move(a)), b_(std::move(b)) {}

    static QuadElt omega(const FieldDesc& field) { return QuadElt(field, 0, 1); }

    const FieldDesc& field() const { return field_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElt operator-() const { return QuadElt(field_, -a_, -b_); }
    QuadElt& operator+=(const QuadElt& y);
    QuadElt& operator-=(const QuadElt& y);
    QuadElt& operator*=(const QuadElt& y);
    QuadElt& operator*=(const Int& k);

    friend QuadElt operator+(QuadElt x, const QuadElt& y) { return x += y; }
    friend QuadElt operator-(QuadElt x, const QuadElt& y) { return x -= y; }
    friend QuadElt operator*(QuadElt x, const QuadElt& y) { return x *= y; }
    friend QuadElt operator*(QuadElt x, const Int& k) { return x *= k; }
    friend QuadElt operator*(const Int& k, QuadElt x) { return x *= k; }

    bool operator==(const QuadElt& o) const {
        return field_ == o.field_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QuadElt& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldDesc field_;
    Int a_ = 0;
    Int b_ = 0;
};

Int norm(const QuadElt& x);
Int trace(const QuadElt& x);
QuadElt conjugate(const QuadElt& x);

long double real_embedding(const QuadElt& x);
long double conj_embedding(const QuadElt& x);

// num / den in lowest terms, den > 0.
class QuadRat {
public:
    explicit QuadRat(const QuadElt& num, Int den = 1);

    const QuadElt& num() const { return num_; }
    const Int& den() const { return den_; }
    const FieldDesc& field() const { return num_.field(); }
    bool is_integral() const { return den_ == 1; }
    bool is_zero() const { return num_.is_zero(); }

    Rat coeff1() const { return make_rat(num_.a(), den_); }
    Rat coeff_omega() const { return make_rat(num_.b(), den_); }

    QuadRat operator-() const { return QuadRat(-num_, den_); }
    friend QuadRat operator+(const QuadRat& x, const QuadRat& y);
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y);
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y);

    // Throws UsageError on zero.
    QuadRat inverse() const;

    bool operator==(const QuadRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    QuadElt num_;
    Int den_;
};

QuadRat conjugate(const QuadRat& x);
Rat norm(const QuadRat& x);

// Grammar: sum of terms `k`, `k*w`, `k*s`, `w`, `s` joined by + or -, with an
// optional form `(expr)/k`. `w` is the order generator, `s` is sqrt(m).
// Throws UsageError on malformed input or a value outside Z + Z*w.
QuadElt parse_element(const FieldDesc& field, std::string_view text);

std::ostream& operator<<(std::ostream& os, const QuadElt& x);
std::ostream& operator<<(std::ostream& os, const QuadRat& x);

}  // namespace cuspidal

#endif  // CUSPIDAL_QUADFIELD_HPP_
