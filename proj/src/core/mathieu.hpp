#pragma once

// Radicals, Mathieu-subspace decisions, the definition-level oracle,
// radical certificates and algebra-level classifications.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kernel.hpp"
#include "subspace.hpp"

namespace mk {

struct ScanOptions {
  std::uint64_t max_scan = 10'000'000;  // element evaluations per scan
  unsigned jobs = 1;                    // 0 = hardware concurrency
};

enum class Method { IdempotentCriterion, Oracle, LineRule, CommutativeRadical };
std::string_view method_name(Method m) noexcept;
Method parse_method(std::string_view text);

/// e is an idempotent of V; b (left factor) and c (right factor) are basis
/// vectors; product = b e, e c or b e c, and lies outside V.
struct Witness {
  Vector e;
  std::optional<Vector> b;
  std::optional<Vector> c;
  Vector product;
};

struct MathieuVerdict {
  bool is_mathieu = false;
  Theta theta = Theta::TwoSided;
  Method method = Method::IdempotentCriterion;
  std::optional<Witness> witness;
};

struct RadicalCertificate {
  std::uint64_t exponent = 0;
  Subspace ideal;
};

// --- Radical ---------------------------------------------------------------

/// a^m in V for all large m, decided on the window after the zero part of
/// the minimal polynomial. Any field.
bool radical_member(const Subspace& v, const Element& a);

/// Every element of sqrt(V) in lexicographic order, cross-checked against
/// the power-cycle definition (Internal on disagreement).
std::vector<Element> radical_enumerate(const Subspace& v, const ScanOptions& opts = {});

// --- Packed building blocks --------------------------------------------------

struct FastWitness {
  ff::Vec e;
  long b = -1;
  long c = -1;
  ff::Vec product;
};

/// First violating product for the idempotent e, in witness order.
std::optional<FastWitness> check_idempotent(const ff::FastAlgebra& alg, const ff::FastSubspace& v, const ff::Vec& e,
                                            Theta theta);

/// Window criterion on packed data.
bool radical_member_fast(const ff::FastAlgebra& alg, const ff::FastSubspace& v, const ff::Vec& a);

/// All nonzero idempotents of a finite algebra in lexicographic order.
class IdempotentIndex {
 public:
  /// Throws TooLarge when q^d exceeds opts.max_scan.
  static IdempotentIndex build(const ff::FastAlgebra& alg, const ScanOptions& opts = {});
  const std::vector<ff::Vec>& nonzero() const noexcept { return idempotents_; }

 private:
  std::vector<ff::Vec> idempotents_;
};

/// Same verdict and witness as the V-scan, using a prebuilt index.
std::optional<FastWitness> decide_with_index(const ff::FastAlgebra& alg, const IdempotentIndex& index,
                                             const ff::FastSubspace& v, Theta theta);

MathieuVerdict to_verdict(const Algebra& a, Theta theta, const std::optional<FastWitness>& w);

// --- Decisions ---------------------------------------------------------------

/// Finite fields: idempotent criterion over V (or over the idempotent index
/// when V is too large to scan). Over Q only the zero/whole, line and
/// unit-containing cases are decided; otherwise InfiniteFieldNoDecision.
MathieuVerdict decide_mathieu(const Subspace& v, Theta theta, const ScanOptions& opts = {});

/// Replays a refutation: e in V, e^2 = e, product recomputed and outside V.
bool verify_witness(const Subspace& v, Theta theta, const Witness& w);

/// Definition-level check through power cycles of every element.
bool oracle_mathieu(const Subspace& v, Theta theta, const ScanOptions& opts = {});

/// Least N with (a^N)_theta inside M. Throws NotMathieu, NotInRadical.
RadicalCertificate certify_radical_membership(const Subspace& m, Theta theta, const Element& a,
                                              const ScanOptions& opts = {});

/// Whether sqrt(V) is an ideal, for commutative algebras over F_p.
bool is_mathieu_commutative(const Subspace& v, const ScanOptions& opts = {});

/// K a is Mathieu iff (a)_theta = K a or a is not quasi-idempotent. Throws ZeroElement.
bool line_is_mathieu(const Element& a, Theta theta);

// --- Algebra-level ------------------------------------------------------------

/// First two-sided Mathieu subspace other than 0 and A: lines first, then
/// larger dimensions, each in enumeration order. Throws OnlyTrivial.
Subspace find_nontrivial_mathieu(const Algebra& a, const ScanOptions& opts = {});

/// Idempotents other than 0 and 1, lexicographic.
std::vector<Element> nontrivial_idempotents(const Algebra& a, const ScanOptions& opts = {});

bool is_quasi_stable(const Algebra& a, const ScanOptions& opts = {});
bool is_stable(const Algebra& a, const ScanOptions& opts = {});

struct MathieuLattice {
  std::vector<Subspace> all;
  std::vector<Subspace> maximal_nontrivial;
  std::vector<Subspace> minimal_nonzero;
  std::uint64_t subspaces_checked = 0;
};

/// Exhaustive sweep over every subspace. Throws TooLarge past `limit` subspaces.
MathieuLattice enumerate_all_mathieu(const Algebra& a, Theta theta, const ScanOptions& opts = {},
                                     std::uint64_t limit = 100'000);

}  // namespace mk
