#pragma once

// Finite-dimensional associative unital algebras given by structure constants.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactfield.hpp"
#include "linalg.hpp"

namespace mk {

class Element;

/// table[i][j] holds the coordinates of e_i * e_j.
using StructureTable = std::vector<std::vector<Vector>>;

/// Immutable handle; copies share the same structure constants.
class Algebra {
 public:
  struct Term {
    std::uint32_t index;
    Scalar coeff;
  };

  /// Validates shapes and, when `check` is set, associativity and the unit
  /// law. Throws NotAssociative / BadUnit / InvalidArgument.
  static Algebra make(FieldSpec field, StructureTable table, Vector unit, std::string label, bool check = true);

  FieldSpec field() const noexcept { return data_->field; }
  std::size_t dim() const noexcept { return data_->dim; }
  const std::string& label() const noexcept { return data_->label; }
  const Vector& unit() const noexcept { return data_->unit; }
  const StructureTable& table() const noexcept { return data_->table; }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return data_->table.at(i).at(j); }
  /// Nonzero terms of e_i * e_j.
  const std::vector<Term>& sparse_product(std::size_t i, std::size_t j) const {
    return data_->sparse[i * data_->dim + j];
  }

  bool is_commutative() const noexcept { return data_->commutative; }
  /// n when this is M_n(K) on the row-major matrix-unit basis.
  std::optional<std::size_t> matrix_order() const noexcept { return data_->matrix_order; }

  /// Bilinear product of coordinate vectors.
  Vector multiply(const Vector& a, const Vector& b) const;

  Element element(Vector coords) const;
  Element basis(std::size_t i) const;
  Element zero() const;
  Element one() const;

  /// Same object or identical field, table, unit.
  bool same_as(const Algebra& other) const;
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.same_as(b); }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !a.same_as(b); }

  /// Returns a copy with a different label.
  Algebra relabeled(std::string label) const;

 private:
  struct Data {
    FieldSpec field;
    std::size_t dim = 0;
    StructureTable table;
    std::vector<std::vector<Term>> sparse;
    Vector unit;
    std::string label;
    bool commutative = false;
    std::optional<std::size_t> matrix_order;
  };
  explicit Algebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static Algebra build(FieldSpec field, StructureTable table, Vector unit, std::string label);

  std::shared_ptr<const Data> data_;
};

/// A coordinate vector in the distinguished basis of a fixed algebra.
class Element {
 public:
  Element(Algebra algebra, Vector coords);

  const Algebra& algebra() const noexcept { return algebra_; }
  const Vector& coords() const noexcept { return coords_; }
  FieldSpec field() const noexcept { return algebra_.field(); }
  bool is_zero() const noexcept { return mk::is_zero(coords_); }

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Algebra algebra_;
  Vector coords_;
};

void require_same_algebra(const Algebra& a, const Algebra& b);

Element elem_mul(const Element& a, const Element& b);
/// a^0 is the unit; binary exponentiation.
Element elem_power(const Element& a, std::uint64_t m);
/// f(a) by Horner's rule.
Element evaluate(const Poly& f, const Element& a);

// --- Constructors ----------------------------------------------------------

/// M_n(K) on E_11, E_12, ..., E_nn (row-major).
Algebra from_matrix_algebra(std::size_t n, FieldSpec field);
/// K[t]/(g) on 1, t, ..., t^{deg g - 1}. Throws NotMonic.
Algebra from_poly_quotient(const Poly& g);
/// A (+) B with componentwise product. Throws FieldMismatch.
Algebra direct_sum(const Algebra& a, const Algebra& b);
/// Same basis, product reversed.
Algebra opposite(const Algebra& a);
/// The field K as a one-dimensional K-algebra.
Algebra field_algebra(FieldSpec field);

/// Flat row-major index of E_ij in M_n(K) (0-based i, j).
inline std::size_t matrix_unit_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

// --- Element structure -----------------------------------------------------

struct MinPolyData {
  Poly minpoly;   // monic
  std::size_t k;  // multiplicity of 0 as a root
  Poly h;         // minpoly = t^k * h, h(0) != 0
};

/// First linear dependence in 1, a, a^2, ...
MinPolyData minimal_polynomial(const Element& a);

struct ElementClass {
  bool nilpotent = false;
  bool invertible = false;
  bool idempotent = false;
  /// a^2 = r*a with r != 0, or a = 0.
  bool quasi_idempotent = false;
  /// r in a^2 = r*a for nonzero quasi-idempotents.
  std::optional<Scalar> ratio;
  std::size_t degree = 0;
};

ElementClass classify_element(const Element& a);
bool is_idempotent(const Element& a);
bool is_quasi_idempotent(const Element& a);

struct PofA {
  std::size_t k;
  Poly u;      // 1 = t^k u + h v
  Poly v;
  Poly p;      // t^k u reduced mod the minimal polynomial
  Element value;
};

/// The idempotent p(a) for a neither nilpotent nor invertible.
/// Throws NilpotentInput / InvertibleInput.
PofA build_p_of_a(const Element& a);

struct CycleInfo {
  std::uint64_t preperiod;  // mu >= 1
  std::uint64_t period;     // lambda >= 1
};

/// Minimal (mu, lambda) with a^{mu+lambda} = a^mu. Finite fields only
/// (InfiniteField); TooLarge when more than `max_steps` powers are needed.
CycleInfo power_cycle(const Element& a, std::uint64_t max_steps = 10'000'000);

// --- Homomorphisms ---------------------------------------------------------

/// Linear map given by a dim(codomain) x dim(domain) matrix acting on
/// coordinate columns; constructed only for unital algebra homomorphisms.
class AlgebraMap {
 public:
  /// Throws NotAHomomorphism naming the violating basis pair or the unit.
  static AlgebraMap make(Algebra domain, Algebra codomain, Matrix matrix);
  static AlgebraMap identity(const Algebra& a);

  const Algebra& domain() const noexcept { return domain_; }
  const Algebra& codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Element apply(const Element& x) const;

 private:
  AlgebraMap(Algebra domain, Algebra codomain, Matrix matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {}
  Algebra domain_;
  Algebra codomain_;
  Matrix matrix_;
};

}  // namespace mk
