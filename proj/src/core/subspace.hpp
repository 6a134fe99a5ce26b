#pragma once

// Subspaces of an algebra in canonical RREF, theta-ideals, preimages,
// quotients and exhaustive enumeration.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "kernel.hpp"

namespace mk {

enum class Theta { Left, Right, PreTwoSided, TwoSided };

inline constexpr std::array<Theta, 4> kAllThetas{Theta::Left, Theta::Right, Theta::PreTwoSided, Theta::TwoSided};

std::string_view theta_name(Theta t) noexcept;
/// Accepts left, right, pre_two_sided, two_sided.
Theta parse_theta(std::string_view text);

class Subspace {
 public:
  static Subspace span(const Algebra& ambient, std::vector<Vector> generators);
  static Subspace span(const Algebra& ambient, const std::vector<Element>& generators);
  static Subspace zero(const Algebra& ambient);
  static Subspace whole(const Algebra& ambient);
  /// Trusts that `rref` is already reduced and nonzero-rowed.
  static Subspace from_rref(const Algebra& ambient, Matrix rref, std::vector<std::size_t> pivots);

  const Algebra& ambient() const noexcept { return ambient_; }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t codim() const noexcept { return ambient_.dim() - basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_whole() const noexcept { return basis_.size() == ambient_.dim(); }

  bool contains(const Vector& v) const;
  bool contains(const Element& a) const;
  bool contains(const Subspace& w) const;

  /// Packed copy; finite fields only.
  ff::FastSubspace fast() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Subspace(Algebra ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(std::move(ambient)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Algebra ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& v, const Subspace& w);
Subspace intersect(const Subspace& v, const Subspace& w);
/// Rows f with f . v = 0 for every v in V; RREF.
Matrix annihilator(const Subspace& v);

/// (a)_theta; the two-sided case also contains a itself.
Subspace theta_ideal(const Element& a, Theta theta);
/// The largest theta-ideal inside V (left + right maxima for pre_two_sided).
Subspace max_theta_ideal(const Subspace& v, Theta theta);
/// True when V absorbs basis products on the side(s) theta demands.
bool is_theta_ideal(const Subspace& v, Theta theta);

Subspace preimage(const AlgebraMap& phi, const Subspace& v);
Subspace image(const AlgebraMap& phi, const Subspace& v);

struct Quotient {
  Algebra algebra;
  AlgebraMap projection;
  std::vector<std::size_t> complement;  // ambient basis indices kept
};
/// A/I on the non-pivot basis vectors of I. Throws NotAnIdeal.
Quotient quotient_algebra(const Subspace& ideal);

/// Number of r-dimensional subspaces of F_q^d, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t d, std::size_t r);

inline constexpr std::uint64_t kDefaultSubspaceLimit = 1'000'000;

/// Every r-dimensional subspace once, in lexicographic order of the
/// flattened RREF matrix. The visitor returns false to stop early.
/// Throws InfiniteField, TooLarge (Gaussian count above `limit`).
void enumerate_subspaces(const Algebra& a, std::size_t r, const std::function<bool(const Subspace&)>& visit,
                         std::uint64_t limit = kDefaultSubspaceLimit);
std::vector<Subspace> all_subspaces(const Algebra& a, std::size_t r, std::uint64_t limit = kDefaultSubspaceLimit);

}  // namespace mk
