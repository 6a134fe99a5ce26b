#pragma once

// Trace pairing on M_n(K): hyperplanes H_X, their duals, explicit
// idempotent witnesses, and the codimension-one and line classifications.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "mathieu.hpp"

namespace mk {

/// n x n matrix of an element of M_n(K), rows of the row-major coordinates.
Matrix to_square(const Element& x);
Element from_square(const Algebra& a, const Matrix& m);
/// Throws NotMatrixAlgebra.
std::size_t require_matrix_order(const Algebra& a);

/// First nonzero coordinate scaled to 1. Throws ZeroDual for 0.
Element canonical_scale(const Element& x);
/// X ~ I_n.
bool is_scalar_class(const Element& x);

/// {A : Tr(AX) = 0}. Throws ZeroDual, NotMatrixAlgebra.
Subspace h_subspace(const Element& x);

struct TraceDual {
  Element x;  // canonical representative
};
/// X with V = H_X. Throws WrongCodimension, NotMatrixAlgebra.
TraceDual trace_dual(const Subspace& v);

struct IdempotentWitnesses {
  Element a;  // A^2 = A, Tr(AX) = 0, AX != 0
  Element b;  // B^2 = B, Tr(XB) = 0, XB != 0
};
/// Throws ScalarDual, TooSmall, ZeroDual, NotMatrixAlgebra.
IdempotentWitnesses witness_idempotents(const Element& x);

struct Codim1Report {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  std::array<std::uint64_t, 4> per_theta{};  // indexed like kAllThetas
  std::vector<Element> representatives;      // X of every class that survives some theta
};
/// Decides every H_X, X up to scalars. Throws TooLarge.
Codim1Report classify_codim1(std::size_t n, std::uint32_t q, const ScanOptions& opts = {});

struct LinesReport {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  std::array<std::uint64_t, 4> per_theta{};
  std::uint64_t quasi_idempotent = 0;
  bool consistent = false;  // per_theta[t] == total - quasi_idempotent for every t
  bool oracle_checked = false;
  bool oracle_agrees = false;
};
/// Every projective line of M_n(F_q) through the line rule, optionally
/// cross-checked with the oracle. Throws TooLarge.
LinesReport classify_lines(std::size_t n, std::uint32_t q, bool with_oracle, const ScanOptions& opts = {});

/// V holds no nonzero idempotent; asserted equal to the two-sided decision.
/// Throws NotProper, NotMatrixAlgebra, TooLarge.
bool check_proper_subspace_criterion(const Subspace& v, const ScanOptions& opts = {});

}  // namespace mk
