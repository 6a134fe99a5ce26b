#pragma once

// Exact scalars over F_p and Q, and dense univariate polynomials over them.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace mk {

class Scalar;

/// Base field of every computation: characteristic 0 is Q, otherwise F_p.
class FieldSpec {
 public:
  /// Largest accepted prime; keeps residue products inside 64 bits.
  static constexpr std::uint32_t kMaxPrime = 2147483647u;

  FieldSpec() = default;  // Q

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws InvalidArgument unless `p` is a prime not above kMaxPrime.
  static FieldSpec prime(std::uint64_t p);
  /// 0 selects Q, anything else must be prime.
  static FieldSpec from_characteristic(std::uint64_t characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_finite() const noexcept { return p_ != 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  Scalar from_mpz(const mpz_class& value) const;
  /// Accepts "n" or "n/d" (Q only, d != 0). F_p inputs are reduced mod p.
  Scalar parse(std::string_view text) const;
  bool contains(const Scalar& x) const noexcept;

  std::string name() const;

  friend bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(FieldSpec a, FieldSpec b) noexcept { return a.p_ != b.p_; }

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of F_p (residue in [0, p)) or of Q (canonical fraction).
class Scalar {
 public:
  static Scalar residue(std::uint64_t value, std::uint32_t modulus);
  static Scalar rational(mpq_class value);

  std::uint32_t characteristic() const noexcept;
  FieldSpec field() const { return FieldSpec::from_characteristic(characteristic()); }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue value; only valid over F_p.
  std::uint32_t residue_value() const;
  /// Fraction value; only valid over Q.
  const mpq_class& rational_value() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Decimal residue for F_p; "num/den" for Q, or just "num" when whole.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  std::variant<Residue, mpq_class> rep_;
};

enum class ArithOp { Add, Sub, Mul, Inv, Neg };

/// Dispatch form of the scalar operators; `y` is ignored for unary ops.
Scalar field_arith(ArithOp op, const Scalar& x, const Scalar* y = nullptr);

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldSpec field) : field_(field) {}
  Poly(FieldSpec field, std::vector<Scalar> coefficients);

  static Poly constant(const Scalar& c);
  /// c * t^k.
  static Poly monomial(const Scalar& c, std::size_t k);
  /// Coefficients given as small integers, ascending.
  static Poly from_ints(FieldSpec field, const std::vector<std::int64_t>& coefficients);

  FieldSpec field() const noexcept { return field_; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coefficient(std::size_t i) const;
  Scalar leading() const;
  bool is_monic() const;
  Poly monic() const;

  Scalar evaluate(const Scalar& x) const;
  Poly shifted(std::size_t k) const;  // * t^k

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; throws DivisionByZero when `divisor` is zero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

struct BezoutResult {
  Poly gcd;  // monic
  Poly u;
  Poly v;
};

/// Extended Euclid: u*f + v*g == gcd(f, g), gcd monic. Throws BothZero.
BezoutResult poly_ext_gcd(const Poly& f, const Poly& g);

struct ZeroSplit {
  std::size_t k;  // multiplicity of 0 as a root
  Poly h;         // h(0) != 0
};

/// f = t^k * h with h(0) != 0. Throws ZeroPolynomial.
ZeroSplit poly_split_at_zero(const Poly& f);

}  // namespace mk
