#include "exactfield.hpp"

#include <algorithm>
#include <charconv>

namespace mk {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    fail(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::from_characteristic(std::uint64_t characteristic) {
  return characteristic == 0 ? rationals() : prime(characteristic);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t value) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(value)));
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar FieldSpec::from_mpz(const mpz_class& value) const {
  if (p_ == 0) return Scalar::rational(mpq_class(value));
  mpz_class r = value % p_;
  if (r < 0) r += p_;
  return Scalar::residue(r.get_ui(), p_);
}

Scalar FieldSpec::parse(std::string_view text) const {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  auto parse_int = [&](std::string_view digits) {
    mpz_class z;
    std::string s(digits);
    if (s.empty() || z.set_str(s, 10) != 0) {
      fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    return z;
  };
  if (slash == std::string_view::npos) return from_mpz(parse_int(trimmed));
  mpz_class num = parse_int(trimmed.substr(0, slash));
  mpz_class den = parse_int(trimmed.substr(slash + 1));
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (p_ == 0) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::rational(q);
  }
  return from_mpz(num) / from_mpz(den);
}

bool FieldSpec::contains(const Scalar& x) const noexcept { return x.characteristic() == p_; }

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::residue(std::uint64_t value, std::uint32_t modulus) {
  return Scalar(Residue{static_cast<std::uint32_t>(value % modulus), modulus});
}

Scalar Scalar::rational(mpq_class value) {
  value.canonicalize();
  return Scalar(std::move(value));
}

std::uint32_t Scalar::characteristic() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->modulus;
  return 0;
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(rep_) == 1;
}

std::uint32_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value;
  fail(ErrorCode::FieldMismatch, "residue requested from a rational scalar");
}

const mpq_class& Scalar::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  fail(ErrorCode::FieldMismatch, "fraction requested from a residue scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
  if (characteristic() != other.characteristic()) {
    fail(ErrorCode::FieldMismatch, "operands over characteristics " + std::to_string(characteristic()) + " and " +
                                       std::to_string(other.characteristic()));
  }
}

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) result = result * base % p;
    base = base * base % p;
    exp >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(rep_);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(other.rep_).value;
    r->value = static_cast<std::uint32_t>(s >= r->modulus ? s - r->modulus : s);
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(other.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * std::get<Residue>(other.rep_).value % r->modulus);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(other.rep_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.rep_)) return r->value == std::get<Scalar::Residue>(b.rep_).value;
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  const auto& q = std::get<mpq_class>(rep_);
  return q.get_str();
}

Scalar field_arith(ArithOp op, const Scalar& x, const Scalar* y) {
  auto need_y = [&]() -> const Scalar& {
    if (y == nullptr) fail(ErrorCode::InvalidArgument, "binary operation without second operand");
    return *y;
  };
  switch (op) {
    case ArithOp::Add: return x + need_y();
    case ArithOp::Sub: return x - need_y();
    case ArithOp::Mul: return x * need_y();
    case ArithOp::Inv: return x.inverse();
    case ArithOp::Neg: return -x;
  }
  fail(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(FieldSpec field, std::vector<Scalar> coefficients) : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (!field_.contains(c)) fail(ErrorCode::FieldMismatch, "coefficient outside " + field_.name());
  }
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t k) {
  FieldSpec f = c.field();
  std::vector<Scalar> coeffs(k + 1, f.zero());
  coeffs[k] = c;
  return Poly(f, std::move(coeffs));
}

Poly Poly::from_ints(FieldSpec field, const std::vector<std::int64_t>& coefficients) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(coefficients.size());
  for (auto c : coefficients) coeffs.push_back(field.from_int(c));
  return Poly(field, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

Scalar Poly::leading() const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Poly Poly::monic() const {
  Scalar inv = leading().inverse();
  return inv * *this;
}

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Scalar> coeffs(k, field_.zero());
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(coeffs));
}

Poly Poly::operator-() const {
  std::vector<Scalar> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(-c);
  return Poly(field_, std::move(coeffs));
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Scalar> coeffs;
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coeffs.push_back(a.coefficient(i) + b.coefficient(i));
  return Poly(a.field_, std::move(coeffs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(coeffs));
}

Poly operator*(const Scalar& c, const Poly& a) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) coeffs.push_back(c * x);
  return Poly(a.field_, std::move(coeffs));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.field_ != field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = coeffs_;
  const long dd = divisor.degree();
  if (degree() < dd) return {Poly(field_), *this};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
  const Scalar lead_inv = divisor.leading().inverse();
  for (long i = degree(); i >= dd; --i) {
    const Scalar& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Scalar q = top * lead_inv;
    const auto shift = static_cast<std::size_t>(i - dd);
    quot[shift] = q;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dd); ++j) rem[shift + j] -= q * divisor.coeffs_[j];
  }
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string mono;
    if (i >= 1) mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

BezoutResult poly_ext_gcd(const Poly& f, const Poly& g) {
  if (f.field() != g.field()) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::BothZero, "gcd of two zero polynomials");
  const FieldSpec field = f.field();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(field.one()), s1(field);
  Poly t0(field), t1 = Poly::constant(field.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Scalar inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

ZeroSplit poly_split_at_zero(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "split of the zero polynomial");
  const auto& c = f.coefficients();
  std::size_t k = 0;
  while (c[k].is_zero()) ++k;
  return {k, Poly(f.field(), std::vector<Scalar>(c.begin() + static_cast<long>(k), c.end()))};
}

}  // namespace mk
