#pragma once

#include "mapspace/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mapspace {

// Dense matrix over the rationals, row-major. Empty (0 x k) shapes are legal
// and show up whenever a cohomology group vanishes.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    std::vector<Scalar> column(std::size_t c) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
// Regular iff square with nonzero determinant; the 0 x 0 matrix is regular.
bool is_regular(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Result of a congruence transformation: change^T * gram * change == form.
// Columns of `change` are the new basis vectors in old coordinates.
struct Congruence {
    Matrix change;
    Matrix form;
};

// Symmetric Gaussian congruence over Q. The form comes out diagonal; its
// entries are not normalized (+-1 is not reachable over Q in general).
// Columns of the change matrix are rescaled to primitive integer vectors with
// positive leading coordinate.
Congruence diagonalize_symmetric(const Matrix& gram);

// Skew Gaussian elimination to consecutive 2x2 blocks [[0, -l], [l, 0]], l != 0.
// Returns nullopt when the form is degenerate (which includes odd size).
std::optional<Congruence> symplectic_normal_form(const Matrix& gram);

// Rescales v to a primitive integer vector whose first nonzero entry is positive.
std::vector<Scalar> primitive_integer(std::vector<Scalar> v);

}  // namespace mapspace
