#ifndef CUSPIDAL_INTLINALG_HPP_
#define CUSPIDAL_INTLINALG_HPP_

// Small dense integer matrices: column Hermite reduction with a unimodular
// transform, and exact solving of M z = t over Z.

#include "cuspidal/bigint.hpp"

#include <optional>
#include <vector>

namespace cuspidal {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> column(std::size_t j) const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// H = M * U with U unimodular and H in column echelon form: pivot columns
// 0..rank-1, each pivot strictly below the previous one, zero columns after.
struct ColumnHermite {
    IntMatrix H;
    IntMatrix U;
    std::vector<std::size_t> pivot_rows;  // one per pivot column
};

ColumnHermite column_hermite(const IntMatrix& M);

// Some integer solution of M z = t, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& M, const std::vector<Int>& t);

// Z-basis of {z : M z = 0}.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& M);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& M);

}  // namespace cuspidal

#endif  // CUSPIDAL_INTLINALG_HPP_
