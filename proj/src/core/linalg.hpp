#pragma once

// Dense exact linear algebra on rows of Scalars.

#include <cstddef>
#include <vector>

#include "exactfield.hpp"

namespace mk {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // list of rows

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v) noexcept;
bool equal(const Vector& a, const Vector& b);
void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x
Vector scaled(const Scalar& a, const Vector& x);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);

/// Brings `rows` to reduced row-echelon form, drops zero rows and returns
/// the pivot column of each remaining row.
std::vector<std::size_t> rref_in_place(Matrix& rows, std::size_t cols);

/// Basis of {x : rows * x = 0}, itself in reduced row-echelon form.
Matrix nullspace(const Matrix& rows, std::size_t cols, FieldSpec field);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a, std::size_t cols);
Vector mat_vec(const Matrix& a, const Vector& x);

/// Lexicographic order on residues (F_p) or on numeric value (Q).
bool scalar_less(const Scalar& a, const Scalar& b);
bool vector_less(const Vector& a, const Vector& b);

}  // namespace mk
