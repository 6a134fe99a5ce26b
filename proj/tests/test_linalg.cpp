#include "support.hpp"

using namespace mk;
using namespace mk::testing;

namespace {

Matrix random_matrix(Gen& g, FieldSpec f, std::size_t rows, std::size_t cols) {
  Matrix m;
  for (std::size_t i = 0; i < rows; ++i) m.push_back(g.vector(f, cols));
  return m;
}

}  // namespace

TEST(Rref, ShapeAndIdempotence) {
  Gen g(11);
  for (FieldSpec f : {fp(2), fp(3), fp(7), FieldSpec::rationals()}) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t rows = g.below(5) + 1, cols = g.below(5) + 1;
      Matrix m = random_matrix(g, f, rows, cols);
      const Matrix original = m;
      const auto pivots = rref_in_place(m, cols);
      ASSERT_EQ(m.size(), pivots.size());
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (i > 0) {
          EXPECT_LT(pivots[i - 1], pivots[i]);
        }
        EXPECT_TRUE(m[i][pivots[i]].is_one());
        for (std::size_t k = 0; k < m.size(); ++k) {
          if (k != i) {
            EXPECT_TRUE(m[k][pivots[i]].is_zero());
          }
        }
        for (std::size_t j = 0; j < pivots[i]; ++j) EXPECT_TRUE(m[i][j].is_zero());
      }
      Matrix again = m;
      rref_in_place(again, cols);
      EXPECT_EQ(again, m);
      // Same row space: the kernels agree.
      EXPECT_EQ(nullspace(original, cols, f), nullspace(m, cols, f));
    }
  }
}

TEST(Nullspace, RankNullityAndAnnihilation) {
  Gen g(12);
  for (FieldSpec f : {fp(2), fp(5), FieldSpec::rationals()}) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t rows = g.below(5), cols = g.below(6) + 1;
      Matrix m = random_matrix(g, f, rows, cols);
      Matrix r = m;
      const std::size_t rank = rref_in_place(r, cols).size();
      const Matrix ns = nullspace(m, cols, f);
      EXPECT_EQ(ns.size() + rank, cols);
      for (const auto& v : ns) {
        EXPECT_FALSE(is_zero(v));
        EXPECT_TRUE(is_zero(mat_vec(m, v)));
      }
    }
  }
}

TEST(MatMul, AgreesWithDefinition) {
  Gen g(13);
  const FieldSpec f = fp(11);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_matrix(g, f, 3, 4), b = random_matrix(g, f, 4, 2);
    const Matrix c = mat_mul(a, b);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        Scalar s = f.zero();
        for (std::size_t k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
        EXPECT_EQ(c[i][j], s);
      }
    }
    EXPECT_EQ(transpose(transpose(a, 4), 3), a);
  }
}

TEST(VectorOrder, Lexicographic) {
  const FieldSpec f = fp(3);
  const Vector a{f.from_int(0), f.from_int(2)}, b{f.from_int(1), f.from_int(0)};
  EXPECT_TRUE(vector_less(a, b));
  EXPECT_FALSE(vector_less(b, a));
  EXPECT_FALSE(vector_less(a, a));
}
