#pragma once

#include <cstddef>
#include <vector>

#include "lieb/rational.hpp"

namespace lieb {

// Dense rational matrix, row-major.  All operations are exact; there is no
// floating point anywhere in this library.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const = default;

    bool is_zero() const;
    void swap_rows(std::size_t r1, std::size_t r2);
    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// In-place reduction to reduced row echelon form (unit pivots, zeros above
// and below).  Returns the pivot column indices in order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the right null space, one vector per free column, in column order.
std::vector<Vec> kernel_basis(const Matrix& m);

// (rank(m^0), rank(m^1), ..., 0) for a nilpotent square matrix.  Throws
// not_nilpotent_error as soon as the rank of the powers stops decreasing
// above zero (the ranks then stay constant forever).
std::vector<std::size_t> rank_profile(const Matrix& m);

// Jordan block sizes of a nilpotent operator, recovered from its rank
// profile via the block-count formula r_{p-1} - 2 r_p + r_{p+1}.  The result
// is nonincreasing and sums to profile[0].  Throws invalid_profile_error if
// the profile is not realizable.
std::vector<std::size_t> jordan_type_from_profile(const std::vector<std::size_t>& profile);

} // namespace lieb
