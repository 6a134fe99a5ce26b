#include "support.hpp"

#include <set>

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

Vector flatten(const Subspace& v) {
  Vector out;
  for (const auto& row : v.basis()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

TEST(Span, Examples) {
  const Algebra a = from_matrix_algebra(2, fp(5));
  EXPECT_EQ(span_of(a, {{1, 0, 0, 0}, {1, 0, 0, 0}}).dim(), 1u);
  EXPECT_TRUE(Subspace::zero(a).contains(a.zero()));
  const Subspace h = trace_zero(a, 2);
  EXPECT_EQ(h.codim(), 1u);
  EXPECT_EQ(intersect(h, span_of(a, {{1, 0, 0, 0}, {0, 0, 0, 1}})), span_of(a, {{1, 0, 0, -1}}));
  EXPECT_EQ(code_of([&] { Subspace::span(a, std::vector<Vector>{zero_vector(a.field(), 3)}); }), ErrorCode::InvalidArgument);
}

TEST(Span, SumIntersectionDimensions) {
  Gen g(41);
  for (const Algebra& a : {from_matrix_algebra(2, fp(3)), from_matrix_algebra(2, FieldSpec::rationals()), from_matrix_algebra(3, fp(2))}) {
    for (int t = 0; t < 40; ++t) {
      const Subspace v = g.subspace(a), w = g.subspace(a);
      const Subspace s = sum(v, w), i = intersect(v, w);
      EXPECT_EQ(s.dim() + i.dim(), v.dim() + w.dim());
      EXPECT_TRUE(s.contains(v));
      EXPECT_TRUE(s.contains(w));
      EXPECT_TRUE(v.contains(i));
      EXPECT_TRUE(w.contains(i));
      EXPECT_EQ(annihilator(v).size(), v.codim());
      for (const auto& f : annihilator(v)) {
        for (const auto& row : v.basis()) EXPECT_TRUE(dot(f, row).is_zero());
      }
    }
  }
}

TEST(Span, CanonicalBasis) {
  Gen g(42);
  const Algebra a = from_matrix_algebra(2, fp(7));
  for (int t = 0; t < 40; ++t) {
    const Subspace v = g.subspace(a);
    // Any other spanning set gives the same RREF.
    std::vector<Vector> gens;
    for (int k = 0; k < 5; ++k) {
      Vector x = zero_vector(a.field(), 4);
      for (const auto& row : v.basis()) axpy(x, g.scalar(a.field()), row);
      gens.push_back(x);
    }
    for (const auto& row : v.basis()) gens.push_back(row);
    EXPECT_EQ(Subspace::span(a, gens).basis(), v.basis());
  }
}

TEST(ThetaIdeal, Examples) {
  const Algebra a = from_matrix_algebra(2, fp(2));
  const Subspace left = theta_ideal(a.basis(0), Theta::Left);
  EXPECT_EQ(left, span_of(a, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  for (Theta t : kAllThetas) {
    EXPECT_TRUE(theta_ideal(a.zero(), t).is_zero());
    EXPECT_TRUE(theta_ideal(a.one(), t).is_whole());
    EXPECT_TRUE(theta_ideal(elem(a, {0, 1, 1, 0}), t).is_whole());
  }
}

TEST(ThetaIdeal, ContainsGeneratorAndIsIdeal) {
  Gen g(43);
  for (const Algebra& a : {from_matrix_algebra(2, fp(3)), from_poly_quotient(poly(fp(2), {0, 0, 0, 1})), opposite(from_matrix_algebra(2, fp(2)))}) {
    for (int t = 0; t < 30; ++t) {
      const Element x = g.element(a);
      for (Theta th : {Theta::Left, Theta::Right, Theta::TwoSided}) {
        const Subspace i = theta_ideal(x, th);
        EXPECT_TRUE(i.contains(x));
        EXPECT_TRUE(is_theta_ideal(i, th));
      }
      EXPECT_EQ(theta_ideal(x, Theta::PreTwoSided), sum(theta_ideal(x, Theta::Left), theta_ideal(x, Theta::Right)));
    }
  }
}

TEST(MaxIdeal, Examples) {
  const Algebra a = from_matrix_algebra(2, fp(5));
  EXPECT_TRUE(max_theta_ideal(trace_zero(a, 2), Theta::TwoSided).is_zero());
  for (Theta t : kAllThetas) EXPECT_TRUE(max_theta_ideal(Subspace::whole(a), t).is_whole());
  const Algebra t3 = from_poly_quotient(poly(fp(2), {0, 0, 0, 1}));
  const Subspace sq = span_of(t3, {{0, 0, 1}});
  EXPECT_EQ(max_theta_ideal(sq, Theta::TwoSided), sq);
}

TEST(MaxIdeal, IsTheLargestIdealInside) {
  Gen g(44);
  const Algebra a = from_matrix_algebra(2, fp(2));
  const auto all = every_subspace(a);
  for (int t = 0; t < 25; ++t) {
    const Subspace v = g.subspace(a);
    for (Theta th : {Theta::Left, Theta::Right, Theta::TwoSided}) {
      const Subspace m = max_theta_ideal(v, th);
      EXPECT_TRUE(v.contains(m));
      EXPECT_TRUE(is_theta_ideal(m, th));
      for (const auto& w : all) {
        if (v.contains(w) && is_theta_ideal(w, th)) {
          EXPECT_TRUE(m.contains(w));
        }
      }
    }
    EXPECT_EQ(max_theta_ideal(v, Theta::PreTwoSided), sum(max_theta_ideal(v, Theta::Left), max_theta_ideal(v, Theta::Right)));
  }
}

TEST(Maps, PreimageAndImage) {
  const Algebra t3 = from_poly_quotient(poly(fp(2), {0, 0, 0, 1}));
  const Subspace ideal = span_of(t3, {{0, 0, 1}});
  const Quotient q = quotient_algebra(ideal);
  EXPECT_EQ(q.algebra.dim(), 2u);
  // The quotient multiplies like F_2[t]/(t^2).
  const Algebra t2 = from_poly_quotient(poly(fp(2), {0, 0, 1}));
  EXPECT_EQ(q.algebra.table(), t2.table());
  const Subspace line = span_of(q.algebra, {{0, 1}});
  EXPECT_EQ(preimage(q.projection, line), span_of(t3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(image(q.projection, Subspace::whole(t3)), Subspace::whole(q.algebra));

  Gen g(45);
  const Algebra m = from_matrix_algebra(2, fp(3));
  const AlgebraMap id = AlgebraMap::identity(m);
  for (int t = 0; t < 10; ++t) {
    const Subspace v = g.subspace(m);
    EXPECT_EQ(preimage(id, v), v);
    EXPECT_EQ(image(id, v), v);
  }
}

TEST(Maps, QuotientErrors) {
  const Algebra a = from_matrix_algebra(2, fp(3));
  EXPECT_EQ(code_of([&] { quotient_algebra(span_of(a, {{0, 1, 0, 0}})); }), ErrorCode::NotAnIdeal);
}

TEST(Enumerate, CountsMatchGaussianBinomials) {
  EXPECT_EQ(all_subspaces(direct_sum(field_algebra(fp(2)), field_algebra(fp(2))), 1).size(), 3u);
  EXPECT_EQ(all_subspaces(from_matrix_algebra(2, fp(3)), 1).size(), 40u);
  const auto zero = all_subspaces(from_matrix_algebra(2, fp(3)), 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_zero());
  for (const Algebra& a : {from_matrix_algebra(2, fp(2)), from_matrix_algebra(2, fp(3)), from_poly_quotient(poly(fp(5), {0, 0, 0, 1}))}) {
    for (std::size_t r = 0; r <= a.dim(); ++r) {
      const auto subs = all_subspaces(a, r);
      EXPECT_EQ(subs.size(), gaussian_binomial(a.field().characteristic(), a.dim(), r));
      std::set<Vector, bool (*)(const Vector&, const Vector&)> seen(vector_less);
      for (std::size_t i = 0; i < subs.size(); ++i) {
        EXPECT_EQ(subs[i].dim(), r);
        seen.insert(flatten(subs[i]));
        if (i > 0) {
          EXPECT_TRUE(vector_less(flatten(subs[i - 1]), flatten(subs[i])));
        }
      }
      EXPECT_EQ(seen.size(), subs.size());
    }
  }
}

TEST(Enumerate, GaussianBinomialValues) {
  EXPECT_EQ(gaussian_binomial(2, 4, 2), 35u);
  EXPECT_EQ(gaussian_binomial(3, 4, 1), 40u);
  EXPECT_EQ(gaussian_binomial(5, 9, 0), 1u);
  EXPECT_EQ(gaussian_binomial(5, 3, 4), 0u);
  EXPECT_EQ(gaussian_binomial(101, 40, 20), UINT64_MAX);
}

TEST(Enumerate, Guardrails) {
  EXPECT_EQ(code_of([] { all_subspaces(from_matrix_algebra(2, FieldSpec::rationals()), 1); }), ErrorCode::InfiniteField);
  EXPECT_EQ(code_of([] { all_subspaces(from_matrix_algebra(3, fp(5)), 4); }), ErrorCode::TooLarge);
  int visits = 0;
  enumerate_subspaces(from_matrix_algebra(2, fp(3)), 2, [&](const Subspace&) { return ++visits < 5; });
  EXPECT_EQ(visits, 5);
}
