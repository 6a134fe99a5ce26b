#include "support.hpp"

#include "matrixlab.hpp"

using namespace mk;
using namespace mk::testing;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Scalar trace(const Element& x) {
  const Matrix m = to_square(x);
  Scalar s = x.field().zero();
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i][i];
  return s;
}

void expect_witnesses(const Element& x) {
  const auto w = witness_idempotents(x);
  for (const Element& e : {w.a, w.b}) {
    EXPECT_TRUE(is_idempotent(e));
    EXPECT_FALSE(e.is_zero());
    EXPECT_NE(e, x.algebra().one());
  }
  EXPECT_TRUE(trace(elem_mul(w.a, x)).is_zero());
  EXPECT_TRUE(trace(elem_mul(x, w.b)).is_zero());
  EXPECT_FALSE(elem_mul(w.a, x).is_zero());
  EXPECT_FALSE(elem_mul(x, w.b).is_zero());
}

}  // namespace

TEST(HSubspace, Examples) {
  const Algebra a = from_matrix_algebra(2, fp(5));
  EXPECT_EQ(h_subspace(a.one()), trace_zero(a, 2));
  EXPECT_EQ(h_subspace(elem(a, {0, 1, 0, 0})), span_of(a, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(code_of([&] { h_subspace(a.zero()); }), ErrorCode::ZeroDual);
  const Algebra t = from_poly_quotient(poly(fp(2), {0, 0, 1}));
  EXPECT_EQ(code_of([&] { h_subspace(t.one()); }), ErrorCode::NotMatrixAlgebra);
}

TEST(TraceDual, Examples) {
  const Algebra a = from_matrix_algebra(2, fp(3));
  EXPECT_EQ(trace_dual(trace_zero(a, 2)).x, a.one());
  const Algebra b = from_matrix_algebra(2, fp(2));
  EXPECT_EQ(trace_dual(span_of(b, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})).x, elem(b, {0, 1, 0, 0}));
  EXPECT_EQ(code_of([&] { trace_dual(span_of(b, {{1, 0, 0, 0}, {0, 1, 0, 0}})); }), ErrorCode::WrongCodimension);
}

TEST(TraceDual, RoundTrip) {
  Gen g(61);
  for (const Algebra& a : {from_matrix_algebra(2, fp(3)), from_matrix_algebra(3, fp(5)), from_matrix_algebra(2, FieldSpec::rationals())}) {
    for (int t = 0; t < 40; ++t) {
      const Element x = g.element(a);
      if (x.is_zero()) continue;
      const Element c = canonical_scale(x);
      EXPECT_EQ(trace_dual(h_subspace(x)).x, c);
      EXPECT_EQ(h_subspace(c), h_subspace(x));
      const Scalar s = g.nonzero_scalar(a.field());
      EXPECT_EQ(h_subspace(s * x), h_subspace(x));
    }
  }
}

TEST(Witness, Cases) {
  const Algebra a = from_matrix_algebra(2, fp(5));
  // b != 0
  const auto case1 = witness_idempotents(elem(a, {2, 3, 1, 4}));
  const Scalar m = -(a.field().from_int(2) / a.field().from_int(3));
  EXPECT_EQ(case1.a, a.element(Vector{a.field().one(), a.field().zero(), m, a.field().zero()}));
  // b = 0, c != 0
  const auto case2 = witness_idempotents(elem(a, {1, 0, 2, 3}));
  const Scalar n = -(a.field().from_int(3) / a.field().from_int(2));
  EXPECT_EQ(case2.a, a.element(Vector{a.field().zero(), n, a.field().zero(), a.field().one()}));
  // b = c = 0, a != d
  const auto case3 = witness_idempotents(elem(a, {1, 0, 0, 3}));
  const Scalar k = a.field().one() / a.field().from_int(2);
  EXPECT_EQ(case3.a, a.element(Vector{k * a.field().from_int(3), k * a.field().from_int(3), -k, -k}));
  EXPECT_EQ(code_of([&] { witness_idempotents(elem(a, {2, 0, 0, 2})); }), ErrorCode::ScalarDual);
  EXPECT_EQ(code_of([&] { witness_idempotents(a.zero()); }), ErrorCode::ZeroDual);
  const Algebra one = from_matrix_algebra(1, fp(5));
  EXPECT_EQ(code_of([&] { witness_idempotents(one.one()); }), ErrorCode::TooSmall);
}

TEST(Witness, ExhaustiveAtOrderTwo) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Algebra a = from_matrix_algebra(2, fp(p));
    for (const auto& x : all_elements(a)) {
      if (x.is_zero() || is_scalar_class(x)) continue;
      expect_witnesses(x);
    }
  }
}

TEST(Witness, SampledAtOrderThree) {
  Gen g(62);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Algebra a = from_matrix_algebra(3, fp(p));
    for (int t = 0; t < 200; ++t) {
      const Element x = g.element(a);
      if (x.is_zero() || is_scalar_class(x)) continue;
      expect_witnesses(x);
    }
  }
  const Algebra q = from_matrix_algebra(3, FieldSpec::rationals());
  for (int t = 0; t < 50; ++t) {
    const Element x = g.element(q);
    if (x.is_zero() || is_scalar_class(x)) continue;
    expect_witnesses(x);
  }
}

TEST(Codim1, SmallCounts) {
  const auto r23 = classify_codim1(2, 3);
  EXPECT_EQ(r23.total, 40u);
  for (auto c : r23.per_theta) EXPECT_EQ(c, 1u);
  ASSERT_EQ(r23.representatives.size(), 1u);
  EXPECT_EQ(r23.representatives[0], r23.representatives[0].algebra().one());

  const auto r22 = classify_codim1(2, 2);
  EXPECT_EQ(r22.total, 15u);
  for (auto c : r22.per_theta) EXPECT_EQ(c, 0u);
  EXPECT_TRUE(r22.representatives.empty());

  const auto r1 = classify_codim1(1, 7);
  EXPECT_EQ(r1.total, 1u);
  for (auto c : r1.per_theta) EXPECT_EQ(c, 1u);

  EXPECT_EQ(code_of([] { classify_codim1(3, 5, ScanOptions{1000, 1}); }), ErrorCode::TooLarge);
}

TEST(Lines, Counts) {
  const auto l2 = classify_lines(2, 2, true);
  EXPECT_EQ(l2.total, 15u);
  EXPECT_TRUE(l2.consistent);
  EXPECT_TRUE(l2.oracle_checked);
  EXPECT_TRUE(l2.oracle_agrees);
  for (auto c : l2.per_theta) EXPECT_EQ(c, l2.total - l2.quasi_idempotent);

  const auto l3 = classify_lines(2, 3, false);
  EXPECT_EQ(l3.total, 40u);
  EXPECT_TRUE(l3.consistent);
  EXPECT_FALSE(l3.oracle_checked);

  const Algebra a = from_matrix_algebra(2, fp(3));
  for (Theta t : kAllThetas) EXPECT_TRUE(line_is_mathieu(elem(a, {0, 1, 0, 0}), t));
}

TEST(ProperCriterion, Examples) {
  const Algebra a = from_matrix_algebra(2, fp(3));
  EXPECT_TRUE(check_proper_subspace_criterion(trace_zero(a, 2)));
  EXPECT_FALSE(check_proper_subspace_criterion(span_of(a, {{1, 0, 0, 0}})));
  const Algebra b = from_matrix_algebra(2, fp(2));
  const Subspace off = span_of(b, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(check_proper_subspace_criterion(off), decide_mathieu(off, Theta::TwoSided).is_mathieu);
  EXPECT_EQ(code_of([&] { check_proper_subspace_criterion(Subspace::whole(b)); }), ErrorCode::NotProper);
}

TEST(ProperCriterion, MatchesDecisionOnRandomSubspaces) {
  Gen g(63);
  const Algebra a = from_matrix_algebra(2, fp(3));
  for (int t = 0; t < 60; ++t) {
    const Subspace v = g.subspace(a, g.below(4));
    if (v.is_whole()) continue;
    bool has_idempotent = false;
    v.fast().for_each_vector([&](const ff::Vec& x) {
      const Element e = a.element(ff::to_vector(x, a.field()));
      if (!e.is_zero() && is_idempotent(e)) has_idempotent = true;
      return !has_idempotent;
    });
    EXPECT_EQ(check_proper_subspace_criterion(v), !has_idempotent);
  }
}
