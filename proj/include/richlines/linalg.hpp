#pragma once

#include "richlines/scalar.hpp"

#include <cstddef>
#include <vector>

namespace richlines {

// Dense row-major matrix over Q. Small sizes only; everything is exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const Vector& row);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;                    // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Pivot choice is the first nonzero entry in each
/// column, so the result is the unique RREF.
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right nullspace, one vector per free column in increasing
/// column order. Each vector has a 1 at its free column and zeros at the other
/// free columns.
std::vector<Vector> nullspace(const Matrix& m);

/// Solves the square system A x = b when A is invertible.
bool solve_square(const Matrix& a, const Vector& b, Vector& x);

Rational dot(const Vector& a, const Vector& b);

}  // namespace richlines
