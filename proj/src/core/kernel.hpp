#pragma once

// Packed residue arithmetic for algebras over F_p. Every exhaustive scan in
// the toolkit runs on these types; the Scalar-based code is the reference.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "algebra.hpp"

namespace mk::ff {

using Word = std::uint32_t;
using Vec = std::vector<Word>;

inline Word add_mod(Word a, Word b, Word p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<Word>(s >= p ? s - p : s);
}
inline Word sub_mod(Word a, Word b, Word p) { return a >= b ? a - b : static_cast<Word>(std::uint64_t(a) + p - b); }
inline Word mul_mod(Word a, Word b, Word p) { return static_cast<Word>(std::uint64_t(a) * b % p); }
Word inv_mod(Word a, Word p);

/// p^d when it fits below 2^62, otherwise nullopt.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t d);

/// Base-p code with the first coordinate most significant, so ascending
/// codes list vectors in lexicographic order.
std::uint64_t encode(const Word* v, std::size_t d, Word p);
void decode(std::uint64_t code, std::size_t d, Word p, Word* out);

Vec to_vec(const Vector& v);
Vector to_vector(const Vec& v, FieldSpec field);

class FastAlgebra {
 public:
  /// Throws InfiniteField over Q.
  explicit FastAlgebra(const Algebra& a);

  Word p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return d_; }
  const Vec& unit() const noexcept { return unit_; }
  const Algebra& source() const noexcept { return source_; }

  /// out = a * b; out must not alias the inputs.
  void mul(const Word* a, const Word* b, Word* out) const;
  /// out = e_i * b.
  void left_basis(std::size_t i, const Word* b, Word* out) const;
  /// out = a * e_j.
  void right_basis(const Word* a, std::size_t j, Word* out) const;

  Vec mul(const Vec& a, const Vec& b) const;
  bool is_idempotent(const Vec& a) const;

 private:
  Algebra source_;
  Word p_;
  std::size_t d_;
  bool lazy_;  // accumulate without reducing every term
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> idx_;
  std::vector<Word> coef_;
  Vec unit_;
};

/// A subspace of F_p^d in packed RREF, with annihilating functionals and an
/// optional membership bitmap over all codes.
class FastSubspace {
 public:
  FastSubspace(Word p, std::size_t d, const std::vector<Vec>& generators);
  /// The common kernel of the given functionals.
  static FastSubspace from_annihilator(Word p, std::size_t d, const std::vector<Vec>& functionals);

  Word p() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return d_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::vector<Vec>& annihilator() const noexcept { return checks_; }

  bool contains(const Word* v) const;
  bool contains(const Vec& v) const { return contains(v.data()); }

  /// Builds the bitmap when p^d <= max_codes; afterwards contains_code is O(1).
  bool build_bitmap(std::uint64_t max_codes);
  bool has_bitmap() const noexcept { return !bitmap_.empty(); }
  bool contains_code(std::uint64_t code) const { return (bitmap_[code >> 6] >> (code & 63)) & 1u; }

  /// Visits every vector of the subspace in lexicographic order; the visitor
  /// returns false to stop. Returns false when stopped early.
  template <typename Visitor>
  bool for_each_vector(Visitor&& visit) const;

 private:
  Word p_;
  std::size_t d_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> checks_;
  std::vector<std::uint64_t> bitmap_;
};

/// Visits all of F_p^d in lexicographic order (same contract as above).
template <typename Visitor>
bool for_each_ambient(Word p, std::size_t d, Visitor&& visit) {
  Vec v(d, 0);
  while (true) {
    if (!visit(static_cast<const Vec&>(v))) return false;
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++v[i] < p) break;
      v[i] = 0;
      if (i == 0) return true;
    }
    if (d == 0) return true;
  }
}

template <typename Visitor>
bool FastSubspace::for_each_vector(Visitor&& visit) const {
  const std::size_t r = rows_.size();
  Vec v(d_, 0);
  std::vector<Word> c(r, 0);
  while (true) {
    if (!visit(static_cast<const Vec&>(v))) return false;
    std::size_t i = r;
    bool carried_out = true;
    while (i > 0) {
      --i;
      const Vec& row = rows_[i];
      for (std::size_t k = 0; k < d_; ++k) {
        if (row[k]) v[k] = add_mod(v[k], row[k], p_);
      }
      c[i] = (c[i] + 1 == p_) ? 0 : c[i] + 1;
      if (c[i] != 0) {
        carried_out = false;
        break;
      }
    }
    if (carried_out) return true;
  }
}

/// Minimal (mu, lambda) of the power sequence a, a^2, ... together with the
/// powers a^1 .. a^{mu+lambda-1}. Throws TooLarge past max_steps.
struct FastCycle {
  std::uint64_t preperiod;
  std::uint64_t period;
  std::vector<Vec> powers;  // powers[m-1] = a^m
  /// a^m for any m >= 1, folded into the recorded range.
  const Vec& power(std::uint64_t m) const {
    const std::uint64_t limit = preperiod + period;
    if (m >= limit) m = preperiod + (m - preperiod) % period;
    return powers[m - 1];
  }
};
FastCycle fast_power_cycle(const FastAlgebra& alg, const Vec& a, std::uint64_t max_steps);

/// Zero multiplicity k and degree of h in minpoly = t^k h, via Krylov
/// elimination in packed arithmetic.
struct FastMinPoly {
  std::size_t k;
  std::size_t h_degree;
  std::vector<Word> coefficients;  // ascending, monic
};
FastMinPoly fast_minimal_polynomial(const FastAlgebra& alg, const Vec& a);

}  // namespace mk::ff
