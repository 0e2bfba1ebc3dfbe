#pragma once

#include <vector>

#include "scalar.hpp"

namespace qe {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

Matrix identity_matrix(FieldId field, std::size_t n);
Matrix zero_matrix(FieldId field, std::size_t rows, std::size_t cols);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
bool is_symmetric(const Matrix& a);
bool matrices_equal(const Matrix& a, const Matrix& b);

// Exact Gaussian elimination over the entry field.
std::size_t rank(Matrix a);
Scalar determinant(Matrix a);

// True iff the square matrix is invertible. Tries a cheap image first (mod a
// large prime over Q, at a rational point over k(t)); full rank there implies
// full rank here. Falls back to exact elimination.
bool is_nonsingular(const Matrix& a);

}  // namespace qe
