#include "cuspidal/quadfield.hpp"

#include "cuspidal/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace cuspidal {

FieldDesc::FieldDesc(std::int64_t m) : m_(m) {
    if (m == 0 || m == 1 || !is_squarefree(m))
        throw UsageError("m = " + std::to_string(m) + " is not a squarefree integer other than 0, 1");
    std::int64_t r = ((m % 4) + 4) % 4;
    kind_ = r == 1 ? OmegaKind::Half : OmegaKind::Sqrt;
}

long double FieldDesc::omega_real() const {
    long double s = std::sqrt(static_cast<long double>(m_));
    return kind_ == OmegaKind::Half ? (1 + s) / 2 : s;
}

long double FieldDesc::omega_conj_real() const {
    long double s = std::sqrt(static_cast<long double>(m_));
    return kind_ == OmegaKind::Half ? (1 - s) / 2 : -s;
}

static void require_same(const FieldDesc& x, const FieldDesc& y) {
    if (x != y)
        throw UsageError("field mismatch: m = " + std::to_string(x.m()) + " vs m = " +
                         std::to_string(y.m()));
}

QuadElt& QuadElt::operator+=(const QuadElt& y) {
    require_same(field_, y.field_);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
}

QuadElt& QuadElt::operator-=(const QuadElt& y) {
    require_same(field_, y.field_);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
}

QuadElt& QuadElt::operator*=(const QuadElt& y) {
    require_same(field_, y.field_);
    // w^2 = k0 + t*w
    const Int k0 = Int(static_cast<long>(field_.sq_const()));
    const Int bd = b_ * y.b_;
    Int a = a_ * y.a_ + bd * k0;
    Int b = a_ * y.b_ + b_ * y.a_;
    if (field_.trace_omega() != 0) b += bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadElt& QuadElt::operator*=(const Int& k) {
    a_ *= k;
    b_ *= k;
    return *this;
}

std::string QuadElt::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string out;
    if (a_ != 0) out = a_.get_str();
    if (b_ > 0 && !out.empty()) out += "+";
    if (b_ == 1)
        out += "w";
    else if (b_ == -1)
        out += "-w";
    else
        out += b_.get_str() + "*w";
    return out;
}

Int norm(const QuadElt& x) {
    const FieldDesc& F = x.field();
    Int n = x.a() * x.a() + Int(static_cast<long>(F.norm_omega())) * x.b() * x.b();
    if (F.trace_omega() != 0) n += x.a() * x.b();
    return n;
}

Int trace(const QuadElt& x) {
    return 2 * x.a() + Int(static_cast<long>(x.field().trace_omega())) * x.b();
}

QuadElt conjugate(const QuadElt& x) {
    const Int t = Int(static_cast<long>(x.field().trace_omega()));
    return QuadElt(x.field(), x.a() + t * x.b(), -x.b());
}

long double real_embedding(const QuadElt& x) {
    return x.a().get_d() + x.b().get_d() * x.field().omega_real();
}

long double conj_embedding(const QuadElt& x) {
    return x.a().get_d() + x.b().get_d() * x.field().omega_conj_real();
}

QuadRat::QuadRat(const QuadElt& num, Int den) : num_(num), den_(std::move(den)) {
    if (den_ == 0) throw UsageError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = gcd(gcd(num_.a(), num_.b()), den_);
    if (g > 1) {
        num_ = QuadElt(num_.field(), num_.a() / g, num_.b() / g);
        den_ /= g;
    }
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.num_ * y.num_, x.den_ * y.den_);
}

QuadRat QuadRat::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero");
    // 1/(u/d) = d*conj(u)/N(u)
    return QuadRat(conjugate(num_) * den_, norm(num_));
}

std::string QuadRat::to_string() const {
    if (den_ == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/" + den_.get_str();
}

QuadRat conjugate(const QuadRat& x) { return QuadRat(conjugate(x.num()), x.den()); }

Rat norm(const QuadRat& x) { return make_rat(norm(x.num()), x.den() * x.den()); }

std::ostream& operator<<(std::ostream& os, const QuadElt& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const QuadRat& x) { return os << x.to_string(); }

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text) : s_(text) {}

    // Coefficients of 1, w and sqrt(m).
    struct Sum {
        Rat one, w, s;
    };

    Sum parse() {
        Sum sum = parse_sum_or_group();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return sum;
    }

private:
    Sum parse_sum_or_group() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            Sum inner = parse_sum();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                Int k = parse_int();
                if (k == 0) fail("division by zero");
                inner.one /= k;
                inner.w /= k;
                inner.s /= k;
            }
            return inner;
        }
        return parse_sum();
    }

    Sum parse_sum() {
        Sum sum;
        bool first = true;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                break;
            }
            if (pos_ >= s_.size()) fail("expected a term");
            parse_term(sum, sign);
            first = false;
        }
        return sum;
    }

    void parse_term(Sum& sum, int sign) {
        Int coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_int();
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else {
                sum.one += Rat(sign * coeff);
                return;
            }
        }
        char c = peek();
        if (c != 'w' && c != 's') fail(have_coeff ? "expected 'w' or 's' after '*'" : "expected a term");
        ++pos_;
        (c == 'w' ? sum.w : sum.s) += Rat(sign * coeff);
    }

    Int parse_int() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw UsageError("cannot parse element '" + std::string(s_) + "': " + why +
                         " at position " + std::to_string(pos_));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

QuadElt parse_element(const FieldDesc& field, std::string_view text) {
    auto sum = ElementParser(text).parse();
    Rat a, b;
    if (field.omega_kind() == OmegaKind::Sqrt) {
        a = sum.one;
        b = sum.w + sum.s;
    } else {
        // sqrt(m) = 2w - 1
        a = sum.one - sum.s;
        b = sum.w + 2 * sum.s;
    }
    a.canonicalize();
    b.canonicalize();
    if (a.get_den() != 1 || b.get_den() != 1)
        throw UsageError("element '" + std::string(text) + "' is not in the maximal order");
    return QuadElt(field, a.get_num(), b.get_num());
}

}  // namespace cuspidal
