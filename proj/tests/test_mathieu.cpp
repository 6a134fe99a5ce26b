#include "support.hpp"

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

Algebra m2(std::uint32_t p) { return from_matrix_algebra(2, p == 0 ? FieldSpec::rationals() : fp(p)); }
Algebra f4() { return from_poly_quotient(poly(fp(2), {1, 1, 1})); }
Algebra t_cubed() { return from_poly_quotient(poly(fp(2), {0, 0, 0, 1})); }
Algebra t_squared() { return from_poly_quotient(poly(fp(2), {0, 0, 1})); }
Algebra f2_f2() { return direct_sum(field_algebra(fp(2)), field_algebra(fp(2))); }

bool ideal_inside(const Element& a, std::uint64_t n, Theta theta, const Subspace& m) {
  return m.contains(theta_ideal(elem_power(a, n), theta));
}

}  // namespace

TEST(Radical, MemberExamples) {
  const Algebra a = m2(5);
  const Subspace h = trace_zero(a, 2);
  EXPECT_TRUE(radical_member(h, elem(a, {0, 1, 0, 0})));
  EXPECT_FALSE(radical_member(h, elem(a, {1, 0, 0, 0})));
  EXPECT_FALSE(radical_member(Subspace::zero(a), a.one()));
  const Algebra q = m2(0);
  EXPECT_TRUE(radical_member(trace_zero(q, 2), elem(q, {0, 1, 0, 0})));
  EXPECT_FALSE(radical_member(trace_zero(q, 2), elem(q, {1, 0, 0, 0})));
}

TEST(Radical, EnumerateExamples) {
  const Algebra a = m2(5);
  const auto rad = radical_enumerate(trace_zero(a, 2));
  std::size_t nilpotents = 0;
  for (const auto& x : all_elements(a)) {
    if (classify_element(x).nilpotent) ++nilpotents;
  }
  EXPECT_EQ(rad.size(), nilpotents);
  for (const auto& x : rad) EXPECT_TRUE(classify_element(x).nilpotent);
  EXPECT_EQ(radical_enumerate(Subspace::whole(a)).size(), 625u);

  const Algebra t3 = t_cubed();
  const auto r = radical_enumerate(span_of(t3, {{0, 1, 0}}));
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0], elem(t3, {0, 0, 0}));
  EXPECT_EQ(r[1], elem(t3, {0, 0, 1}));
  EXPECT_EQ(r[2], elem(t3, {0, 1, 0}));
  EXPECT_EQ(r[3], elem(t3, {0, 1, 1}));
  EXPECT_EQ(code_of([] { radical_enumerate(Subspace::whole(m2(0))); }), ErrorCode::InfiniteField);
  EXPECT_EQ(code_of([] { radical_enumerate(Subspace::whole(m2(5)), ScanOptions{100, 1}); }), ErrorCode::TooLarge);
}

TEST(Radical, WindowMatchesNaiveDefinition) {
  Gen g(51);
  for (const Algebra& a : {m2(2), m2(3), t_cubed(), f4(), opposite(m2(2))}) {
    const auto elements = all_elements(a);
    for (int t = 0; t < 12; ++t) {
      const Subspace v = g.subspace(a);
      std::vector<Element> expected;
      for (const auto& x : elements) {
        const bool naive = naive_radical(v, x);
        EXPECT_EQ(radical_member(v, x), naive) << a.label();
        if (naive) expected.push_back(x);
      }
      EXPECT_EQ(radical_enumerate(v), expected);
    }
  }
}

TEST(Decide, Examples) {
  for (Theta t : kAllThetas) {
    EXPECT_TRUE(decide_mathieu(trace_zero(m2(3), 2), t).is_mathieu);
    const auto v = decide_mathieu(trace_zero(m2(2), 2), t);
    EXPECT_FALSE(v.is_mathieu);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(m2(2).element(v.witness->e), m2(2).one());
  }
  const Algebra a = m2(2);
  const auto v = decide_mathieu(span_of(a, {{1, 0, 0, 0}}), Theta::Left);
  EXPECT_FALSE(v.is_mathieu);
  EXPECT_EQ(v.method, Method::IdempotentCriterion);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(a.element(v.witness->e), elem(a, {1, 0, 0, 0}));
  ASSERT_TRUE(v.witness->b.has_value());
  EXPECT_FALSE(v.witness->c.has_value());
  EXPECT_EQ(a.element(*v.witness->b), elem(a, {0, 0, 1, 0}));
  EXPECT_EQ(a.element(v.witness->product), elem(a, {0, 0, 1, 0}));
}

TEST(Decide, Rationals) {
  const Algebra q = m2(0);
  for (Theta t : kAllThetas) {
    EXPECT_TRUE(decide_mathieu(Subspace::zero(q), t).is_mathieu);
    EXPECT_TRUE(decide_mathieu(Subspace::whole(q), t).is_mathieu);
    EXPECT_TRUE(decide_mathieu(span_of(q, {{0, 1, 0, 0}}), t).is_mathieu);
    const auto unit = decide_mathieu(span_of(q, {{1, 0, 0, 1}, {0, 1, 0, 0}}), t);
    EXPECT_FALSE(unit.is_mathieu);
    if (unit.witness) {
      EXPECT_TRUE(verify_witness(span_of(q, {{1, 0, 0, 1}, {0, 1, 0, 0}}), t, *unit.witness));
    }
    EXPECT_EQ(code_of([&] { decide_mathieu(trace_zero(q, 2), t); }), ErrorCode::InfiniteFieldNoDecision);
    EXPECT_EQ(code_of([&] { oracle_mathieu(trace_zero(q, 2), t); }), ErrorCode::InfiniteField);
  }
}

TEST(Decide, Guardrail) {
  const Algebra a = from_matrix_algebra(3, fp(5));
  EXPECT_EQ(code_of([&] { oracle_mathieu(Subspace::whole(a), Theta::Left, ScanOptions{1000, 1}); }), ErrorCode::TooLarge);
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_mathieu(trace_zero(m2(3), 2), Theta::TwoSided));
  EXPECT_TRUE(oracle_mathieu(span_of(m2(2), {{0, 1, 0, 0}}), Theta::TwoSided));
  for (const Algebra& a : {m2(2), f2_f2(), t_cubed(), f4()}) {
    for (Theta t : kAllThetas) EXPECT_FALSE(oracle_mathieu(Subspace::span(a, std::vector<Element>{a.one()}), t));
  }
}

TEST(Oracle, AgreesWithDecisionEverywhere) {
  for (const Algebra& a : {f2_f2(), t_squared(), t_cubed(), f4(), opposite(m2(2))}) {
    for (const auto& v : every_subspace(a)) {
      for (Theta t : kAllThetas) {
        const auto verdict = decide_mathieu(v, t);
        EXPECT_EQ(verdict.is_mathieu, oracle_mathieu(v, t)) << a.label();
        EXPECT_EQ(verdict.witness.has_value(), !verdict.is_mathieu);
        if (verdict.witness) {
          EXPECT_TRUE(verify_witness(v, t, *verdict.witness));
        }
      }
    }
  }
}

TEST(Oracle, AgreesOnRandomSubspaces) {
  Gen g(52);
  for (const Algebra& a : {m2(2), m2(3)}) {
    for (int n = 0; n < 30; ++n) {
      const Subspace v = g.subspace(a, 1 + g.below(2));
      for (Theta t : kAllThetas) EXPECT_EQ(decide_mathieu(v, t).is_mathieu, oracle_mathieu(v, t));
    }
  }
}

TEST(Witness, ReplayRejectsTampering) {
  const Algebra a = m2(2);
  const Subspace v = span_of(a, {{1, 0, 0, 0}});
  const auto verdict = decide_mathieu(v, Theta::Left);
  ASSERT_TRUE(verdict.witness.has_value());
  Witness w = *verdict.witness;
  EXPECT_TRUE(verify_witness(v, Theta::Left, w));
  // Right side needs c, not b.
  EXPECT_FALSE(verify_witness(v, Theta::Right, w));
  Witness wrong_product = w;
  wrong_product.product = elem(a, {0, 0, 0, 1}).coords();
  EXPECT_FALSE(verify_witness(v, Theta::Left, wrong_product));
  Witness not_in_v = w;
  not_in_v.e = elem(a, {0, 0, 0, 1}).coords();
  EXPECT_FALSE(verify_witness(v, Theta::Left, not_in_v));
  Witness not_idempotent = w;
  not_idempotent.e = elem(a, {0, 0, 0, 0}).coords();
  EXPECT_FALSE(verify_witness(v, Theta::Left, not_idempotent));
}

TEST(Decide, IndexMatchesScan) {
  Gen g(53);
  const Algebra a = from_matrix_algebra(2, fp(5));
  const ff::FastAlgebra fast(a);
  const auto index = IdempotentIndex::build(fast);
  for (int n = 0; n < 40; ++n) {
    const Subspace v = g.subspace(a);
    for (Theta t : kAllThetas) {
      const auto via_index = to_verdict(a, t, decide_with_index(fast, index, v.fast(), t));
      const auto via_scan = decide_mathieu(v, t);
      EXPECT_EQ(via_index.is_mathieu, via_scan.is_mathieu);
      if (via_index.witness && via_scan.witness) {
        EXPECT_EQ(via_index.witness->e, via_scan.witness->e);
        EXPECT_EQ(via_index.witness->product, via_scan.witness->product);
      }
    }
  }
}

TEST(Certify, Examples) {
  const Algebra a = m2(5);
  const Element e12 = elem(a, {0, 1, 0, 0});
  for (Theta t : kAllThetas) {
    const auto zero = certify_radical_membership(Subspace::zero(a), t, e12);
    EXPECT_EQ(zero.exponent, 2u);
    EXPECT_TRUE(zero.ideal.is_zero());
    EXPECT_EQ(certify_radical_membership(Subspace::whole(a), t, elem(a, {1, 2, 3, 4})).exponent, 0u);
  }
  EXPECT_EQ(certify_radical_membership(trace_zero(a, 2), Theta::TwoSided, e12).exponent, 2u);
  EXPECT_EQ(code_of([&] { certify_radical_membership(trace_zero(a, 2), Theta::TwoSided, elem(a, {1, 0, 0, 0})); }),
            ErrorCode::NotInRadical);
  const Algebra b = m2(2);
  EXPECT_EQ(code_of([&] { certify_radical_membership(trace_zero(b, 2), Theta::TwoSided, elem(b, {0, 1, 0, 0})); }),
            ErrorCode::NotMathieu);
}

TEST(Certify, ExponentIsLeast) {
  Gen g(54);
  for (const Algebra& a : {m2(3), t_cubed(), opposite(m2(2))}) {
    int certified = 0;
    for (int n = 0; n < 40; ++n) {
      const Subspace v = g.subspace(a);
      for (Theta t : kAllThetas) {
        if (!decide_mathieu(v, t).is_mathieu) continue;
        for (int s = 0; s < 5; ++s) {
          const Element x = g.element(a);
          if (!radical_member(v, x)) continue;
          const auto c = certify_radical_membership(v, t, x);
          ++certified;
          EXPECT_EQ(c.ideal, theta_ideal(elem_power(x, c.exponent), t));
          EXPECT_TRUE(v.contains(c.ideal));
          if (c.exponent > 0) {
            EXPECT_FALSE(ideal_inside(x, c.exponent - 1, t, v));
          }
        }
      }
    }
    EXPECT_GT(certified, 0) << a.label();
  }
}

TEST(Commutative, MatchesDecision) {
  const Algebra t3 = t_cubed();
  EXPECT_TRUE(is_mathieu_commutative(span_of(t3, {{0, 1, 0}})));
  EXPECT_TRUE(is_mathieu_commutative(Subspace::whole(t3)));
  for (const Algebra& a : {t_squared(), t_cubed(), f2_f2(), f4(), from_poly_quotient(poly(fp(3), {0, -1, 1}))}) {
    for (const auto& v : every_subspace(a)) {
      EXPECT_EQ(is_mathieu_commutative(v), decide_mathieu(v, Theta::TwoSided).is_mathieu) << a.label();
    }
  }
  const Algebra t2 = t_squared();
  // (1+t)^2 = 1, so the radical of span{1+t} is {0}.
  EXPECT_TRUE(is_mathieu_commutative(span_of(t2, {{1, 1}})));
  EXPECT_TRUE(decide_mathieu(span_of(t2, {{1, 1}}), Theta::TwoSided).is_mathieu);
  EXPECT_EQ(code_of([] { is_mathieu_commutative(Subspace::whole(m2(2))); }), ErrorCode::NotCommutative);
}

TEST(Lines, Examples) {
  const Algebra q = m2(0);
  EXPECT_TRUE(line_is_mathieu(elem(q, {0, 1, 0, 0}), Theta::TwoSided));
  EXPECT_FALSE(line_is_mathieu(elem(q, {1, 0, 0, 0}), Theta::Left));
  const Algebra s = f2_f2();
  EXPECT_TRUE(line_is_mathieu(elem(s, {1, 0}), Theta::TwoSided));
  EXPECT_EQ(code_of([&] { line_is_mathieu(s.zero(), Theta::Left); }), ErrorCode::ZeroElement);
}

TEST(Lines, RuleMatchesOracle) {
  for (const Algebra& a : {m2(2), t_cubed(), f2_f2(), f4(), opposite(m2(2))}) {
    for (const auto& line : all_subspaces(a, 1)) {
      const Element x = a.element(line.basis()[0]);
      for (Theta t : kAllThetas) EXPECT_EQ(line_is_mathieu(x, t), oracle_mathieu(line, t)) << a.label();
    }
  }
}

TEST(FindNontrivial, Examples) {
  const Algebra a = m2(2);
  EXPECT_EQ(find_nontrivial_mathieu(a), span_of(a, {{0, 0, 1, 0}}));
  const Algebra f = f4();
  EXPECT_EQ(find_nontrivial_mathieu(f), span_of(f, {{0, 1}}));
  EXPECT_EQ(code_of([] { find_nontrivial_mathieu(field_algebra(fp(2))); }), ErrorCode::OnlyTrivial);
  for (const Algebra& b : {t_cubed(), f2_f2(), opposite(m2(3))}) {
    const Subspace v = find_nontrivial_mathieu(b);
    EXPECT_FALSE(v.is_zero());
    EXPECT_FALSE(v.is_whole());
    EXPECT_TRUE(oracle_mathieu(v, Theta::TwoSided));
  }
}

TEST(Classify, QuasiStableAndStable) {
  EXPECT_TRUE(is_quasi_stable(f4()));
  EXPECT_TRUE(is_quasi_stable(f2_f2()));
  EXPECT_TRUE(is_quasi_stable(t_cubed()));
  EXPECT_TRUE(is_quasi_stable(from_poly_quotient(poly(fp(3), {1, 0, 1}))));
  EXPECT_FALSE(is_quasi_stable(m2(2)));
  const Algebra f3f3 = direct_sum(field_algebra(fp(3)), field_algebra(fp(3)));
  EXPECT_TRUE(is_quasi_stable(f3f3));
  EXPECT_FALSE(is_stable(f3f3));
  EXPECT_TRUE(is_stable(f2_f2()));
  EXPECT_TRUE(is_stable(field_algebra(fp(3))));
  EXPECT_FALSE(is_stable(f4()));
  EXPECT_EQ(nontrivial_idempotents(f2_f2()).size(), 2u);
  EXPECT_TRUE(nontrivial_idempotents(t_cubed()).empty());
}

TEST(Classify, QuasiStableMatchesDefinition) {
  for (const Algebra& a : {f2_f2(), t_squared(), f4(), t_cubed(), m2(2), from_poly_quotient(poly(fp(3), {0, -1, 1}))}) {
    bool every_mathieu = true, every_ideal = true;
    for (const auto& v : every_subspace(a)) {
      if (v.contains(a.one())) continue;
      every_mathieu = every_mathieu && oracle_mathieu(v, Theta::TwoSided);
      every_ideal = every_ideal && is_theta_ideal(v, Theta::TwoSided);
    }
    EXPECT_EQ(is_quasi_stable(a), every_mathieu) << a.label();
    EXPECT_EQ(is_stable(a), every_ideal) << a.label();
  }
}

TEST(Lattice, Examples) {
  const Algebra s = f2_f2();
  const auto lat = enumerate_all_mathieu(s, Theta::TwoSided);
  EXPECT_EQ(lat.subspaces_checked, 5u);
  // 0, the two idempotent lines and the whole algebra.
  EXPECT_EQ(lat.all.size(), 4u);
  EXPECT_EQ(lat.maximal_nontrivial.size(), 2u);
  EXPECT_EQ(lat.minimal_nonzero.size(), 2u);

  const auto one = enumerate_all_mathieu(field_algebra(fp(2)), Theta::TwoSided);
  EXPECT_TRUE(one.maximal_nontrivial.empty());
  ASSERT_EQ(one.minimal_nonzero.size(), 1u);
  EXPECT_TRUE(one.minimal_nonzero[0].is_whole());
  EXPECT_EQ(one.all.size(), 2u);

  const Algebra a = m2(2);
  const auto m = enumerate_all_mathieu(a, Theta::TwoSided);
  EXPECT_FALSE(m.maximal_nontrivial.empty());
  std::vector<Subspace> expected;
  for (const auto& line : all_subspaces(a, 1)) {
    if (!is_quasi_idempotent(a.element(line.basis()[0]))) expected.push_back(line);
  }
  EXPECT_EQ(m.minimal_nonzero, expected);
  EXPECT_EQ(code_of([] { enumerate_all_mathieu(m2(3), Theta::Left, {}, 10); }), ErrorCode::TooLarge);
}
