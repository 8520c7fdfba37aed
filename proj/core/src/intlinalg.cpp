#include "cuspidal/intlinalg.hpp"

#include "cuspidal/errors.hpp"

#include <utility>

namespace cuspidal {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix shape mismatch");
    IntMatrix P(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) P(i, j) += (*this)(i, k) * o(k, j);
        }
    return P;
}

namespace {

// (col_p, col_j) <- (s*col_p + t*col_j, -(b/g)*col_p + (a/g)*col_j)
void combine_columns(IntMatrix& A, std::size_t p, std::size_t j, const Int& s, const Int& t,
                     const Int& u, const Int& v) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Int x = A(i, p), y = A(i, j);
        A(i, p) = s * x + t * y;
        A(i, j) = u * x + v * y;
    }
}

void negate_column(IntMatrix& A, std::size_t p) {
    for (std::size_t i = 0; i < A.rows(); ++i) A(i, p) = -A(i, p);
}

}  // namespace

ColumnHermite column_hermite(const IntMatrix& M) {
    ColumnHermite out{M, IntMatrix::identity(M.cols()), {}};
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    std::size_t p = 0;
    for (std::size_t i = 0; i < H.rows() && p < H.cols(); ++i) {
        for (std::size_t j = p + 1; j < H.cols(); ++j) {
            if (H(i, j) == 0) continue;
            Int a = H(i, p), b = H(i, j), s, t;
            Int g = xgcd(a, b, s, t);
            Int u = -b / g, v = a / g;
            combine_columns(H, p, j, s, t, u, v);
            combine_columns(U, p, j, s, t, u, v);
        }
        if (H(i, p) == 0) continue;
        if (H(i, p) < 0) {
            negate_column(H, p);
            negate_column(U, p);
        }
        // Reduce earlier pivot columns modulo this one on row i.
        for (std::size_t q = 0; q < p; ++q) {
            Int k = fdiv(H(i, q), H(i, p));
            if (k == 0) continue;
            for (std::size_t r = 0; r < H.rows(); ++r) H(r, q) -= k * H(r, p);
            for (std::size_t r = 0; r < U.rows(); ++r) U(r, q) -= k * U(r, p);
        }
        out.pivot_rows.push_back(i);
        ++p;
    }
    return out;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& M, const std::vector<Int>& t) {
    if (t.size() != M.rows()) throw UsageError("right-hand side has wrong length");
    ColumnHermite ch = column_hermite(M);
    const std::size_t rank = ch.pivot_rows.size();
    std::vector<Int> w(M.cols());
    std::size_t next = 0;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Int r = t[i];
        for (std::size_t q = 0; q < next; ++q) r -= ch.H(i, q) * w[q];
        if (next < rank && ch.pivot_rows[next] == i) {
            if (!divides(ch.H(i, next), r)) return std::nullopt;
            w[next] = r / ch.H(i, next);
            ++next;
        } else if (r != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> z(M.cols());
    for (std::size_t r = 0; r < M.cols(); ++r)
        for (std::size_t q = 0; q < rank; ++q) z[r] += ch.U(r, q) * w[q];
    return z;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& M) {
    ColumnHermite ch = column_hermite(M);
    std::vector<std::vector<Int>> out;
    for (std::size_t q = ch.pivot_rows.size(); q < M.cols(); ++q) out.push_back(ch.U.column(q));
    return out;
}

Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw UsageError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && A(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

}  // namespace cuspidal
