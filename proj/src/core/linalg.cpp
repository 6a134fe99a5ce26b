#include "linalg.hpp"

#include <utility>

namespace mk {

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) noexcept {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector scaled(const Scalar& a, const Vector& x) {
  Vector out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(a * v);
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.at(i);
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.at(i);
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar acc = a.at(0).field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b.at(i).is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

std::vector<std::size_t> rref_in_place(Matrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows.size() && rows[pivot_row][c].is_zero()) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    const Scalar inv = rows[rank][c].inverse();
    if (!inv.is_one()) {
      for (auto& x : rows[rank]) x *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Scalar factor = -rows[r][c];
      axpy(rows[r], factor, rows[rank]);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

Matrix nullspace(const Matrix& rows, std::size_t cols, FieldSpec field) {
  Matrix reduced = rows;
  const auto pivots = rref_in_place(reduced, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(field, cols);
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced[r][free];
    basis.push_back(std::move(v));
  }
  rref_in_place(basis, cols);
  return basis;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix out;
  out.reserve(a.size());
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  for (const auto& row : a) {
    Vector r = zero_vector(row.at(0).field(), cols);
    for (std::size_t k = 0; k < inner; ++k) axpy(r, row[k], b[k]);
    out.push_back(std::move(r));
  }
  return out;
}

Matrix transpose(const Matrix& a, std::size_t cols) {
  Matrix out;
  if (a.empty()) return out;
  out.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Vector col;
    col.reserve(a.size());
    for (const auto& row : a) col.push_back(row[c]);
    out.push_back(std::move(col));
  }
  return out;
}

Vector mat_vec(const Matrix& a, const Vector& x) {
  Vector out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(row, x));
  return out;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.characteristic() != 0) return a.residue_value() < b.residue_value();
  return a.rational_value() < b.rational_value();
}

bool vector_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] == b[i]) continue;
    return scalar_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

}  // namespace mk
