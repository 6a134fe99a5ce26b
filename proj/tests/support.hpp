#pragma once

// Hand-rolled generators and small brute-force oracles shared by the tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mathieu.hpp"

namespace mk::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  Scalar scalar(FieldSpec f) {
    if (f.is_finite()) return f.from_int(static_cast<std::int64_t>(below(f.characteristic())));
    const std::int64_t num = between(-6, 6);
    const std::int64_t den = between(1, 4);
    return f.from_int(num) / f.from_int(den);
  }

  Scalar nonzero_scalar(FieldSpec f) {
    while (true) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  Vector vector(FieldSpec f, std::size_t n) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
  }

  Element element(const Algebra& a) { return a.element(vector(a.field(), a.dim())); }

  Poly poly(FieldSpec f, std::size_t max_degree) {
    std::vector<Scalar> cs;
    const std::size_t deg = below(max_degree + 1);
    for (std::size_t i = 0; i <= deg; ++i) cs.push_back(scalar(f));
    return Poly(f, std::move(cs));
  }

  Subspace subspace(const Algebra& a) { return subspace(a, below(a.dim() + 1)); }

  Subspace subspace(const Algebra& a, std::size_t generators) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < generators; ++i) gens.push_back(vector(a.field(), a.dim()));
    return Subspace::span(a, std::move(gens));
  }

 private:
  std::mt19937_64 rng_;
};

inline FieldSpec fp(std::uint32_t p) { return FieldSpec::prime(p); }

inline Poly poly(FieldSpec f, std::vector<std::int64_t> cs) { return Poly::from_ints(f, cs); }

inline Element elem(const Algebra& a, std::vector<std::int64_t> cs) {
  Vector v;
  for (auto c : cs) v.push_back(a.field().from_int(c));
  return a.element(std::move(v));
}

inline Subspace span_of(const Algebra& a, std::vector<std::vector<std::int64_t>> rows) {
  std::vector<Element> gens;
  for (auto& r : rows) gens.push_back(elem(a, r));
  return Subspace::span(a, gens);
}

// Trace-zero hyperplane of M_n.
inline Subspace trace_zero(const Algebra& a, std::size_t n) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) gens.push_back(a.basis(matrix_unit_index(n, i, j)));
    }
  }
  for (std::size_t i = 1; i < n; ++i) gens.push_back(a.basis(0) - a.basis(matrix_unit_index(n, i, i)));
  return Subspace::span(a, gens);
}

// Every element of a finite algebra, in code order.
inline std::vector<Element> all_elements(const Algebra& a) {
  std::vector<Element> out;
  const std::uint32_t p = a.field().characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vector v;
    std::uint64_t c = code;
    std::vector<std::int64_t> digits(a.dim());
    for (std::size_t i = a.dim(); i-- > 0;) {
      digits[i] = static_cast<std::int64_t>(c % p);
      c /= p;
    }
    for (auto d : digits) v.push_back(a.field().from_int(d));
    out.push_back(a.element(std::move(v)));
  }
  return out;
}

// a^m in V for every m in [from, from + count).
inline bool powers_in(const Subspace& v, const Element& a, std::uint64_t from, std::uint64_t count) {
  Element x = elem_power(a, from);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!v.contains(x)) return false;
    x = elem_mul(x, a);
  }
  return true;
}

// Naive sqrt(V) membership over a finite field: every power from |A| on.
inline bool naive_radical(const Subspace& v, const Element& a) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) total *= a.field().characteristic();
  return powers_in(v, a, total, total);
}

inline std::vector<Subspace> every_subspace(const Algebra& a) {
  std::vector<Subspace> out;
  for (std::size_t r = 0; r <= a.dim(); ++r) {
    for (auto& s : all_subspaces(a, r)) out.push_back(s);
  }
  return out;
}

}  // namespace mk::testing
