#include "matrixlab.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"

namespace mk {

std::size_t require_matrix_order(const Algebra& a) {
  auto n = a.matrix_order();
  if (!n) fail(ErrorCode::NotMatrixAlgebra, "'" + a.label() + "' is not M_n(K) on the matrix-unit basis");
  return *n;
}

Matrix to_square(const Element& x) {
  const std::size_t n = require_matrix_order(x.algebra());
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].assign(x.coords().begin() + static_cast<long>(i * n), x.coords().begin() + static_cast<long>((i + 1) * n));
  }
  return m;
}

Element from_square(const Algebra& a, const Matrix& m) {
  Vector coords;
  for (const auto& row : m) coords.insert(coords.end(), row.begin(), row.end());
  return a.element(std::move(coords));
}

Element canonical_scale(const Element& x) {
  const auto& c = x.coords();
  auto it = std::find_if(c.begin(), c.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == c.end()) fail(ErrorCode::ZeroDual, "X = 0 defines no hyperplane");
  return it->inverse() * x;
}

bool is_scalar_class(const Element& x) {
  require_matrix_order(x.algebra());
  return canonical_scale(x) == x.algebra().one();
}

Subspace h_subspace(const Element& x) {
  const std::size_t n = require_matrix_order(x.algebra());
  if (x.is_zero()) fail(ErrorCode::ZeroDual, "X = 0 defines no hyperplane");
  // Tr(AX) = sum_ij A_ij X_ji.
  const Matrix sq = to_square(x);
  Vector f;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.push_back(sq[j][i]);
  }
  const Algebra& a = x.algebra();
  return Subspace::span(a, nullspace(Matrix{f}, a.dim(), a.field()));
}

TraceDual trace_dual(const Subspace& v) {
  const Algebra& a = v.ambient();
  const std::size_t n = require_matrix_order(a);
  if (v.codim() != 1) fail(ErrorCode::WrongCodimension, "codimension is " + std::to_string(v.codim()) + ", not 1");
  const Vector f = annihilator(v).at(0);
  Matrix x(n, zero_vector(a.field(), n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x[j][i] = f[matrix_unit_index(n, i, j)];
  }
  return {canonical_scale(from_square(a, x))};
}

namespace {

// The 2 x 2 idempotent for [[a, b], [c, d]], not a multiple of I_2.
Matrix two_by_two(const Matrix& x) {
  const Scalar& a = x[0][0];
  const Scalar& b = x[0][1];
  const Scalar& c = x[1][0];
  const Scalar& d = x[1][1];
  const FieldSpec f = a.field();
  if (!b.is_zero()) return {{f.one(), f.zero()}, {-(a / b), f.zero()}};
  if (!c.is_zero()) return {{f.zero(), -(d / c)}, {f.zero(), f.one()}};
  const Scalar s = (d - a).inverse();
  return {{s * d, s * d}, {-(s * a), -(s * a)}};
}

// A with A^2 = A, Tr(AX) = 0, AX != 0 for a non-scalar n x n matrix X.
Matrix left_witness(const Matrix& x) {
  const std::size_t n = x.size();
  const FieldSpec f = x[0][0].field();
  if (n == 2) return two_by_two(x);
  std::size_t m = 0, k = 0;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i) {
    for (std::size_t j = i + 1; j < n && !found; ++j) {
      if (!x[i][j].is_zero() || !x[j][i].is_zero() || x[i][i] != x[j][j]) {
        m = i;
        k = j;
        found = true;
      }
    }
  }
  if (!found) fail(ErrorCode::ScalarDual, "every principal 2 x 2 minor is scalar");
  // sigma sends m -> 0, k -> 1 and keeps the remaining indices in order.
  std::vector<std::size_t> sigma(n);
  std::size_t next = 2;
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i == m ? 0 : i == k ? 1 : next++;
  Matrix xp(n, zero_vector(f, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) xp[sigma[i]][sigma[j]] = x[i][j];
  }
  const Matrix a0 = two_by_two({{xp[0][0], xp[0][1]}, {xp[1][0], xp[1][1]}});
  Matrix ap(n, zero_vector(f, n));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) ap[i][j] = a0[i][j];
  }
  Matrix out(n, zero_vector(f, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = ap[sigma[i]][sigma[j]];
  }
  return out;
}

}  // namespace

IdempotentWitnesses witness_idempotents(const Element& x) {
  const Algebra& alg = x.algebra();
  const std::size_t n = require_matrix_order(alg);
  if (n == 1) fail(ErrorCode::TooSmall, "M_1(K) has no nontrivial idempotents");
  if (x.is_zero()) fail(ErrorCode::ZeroDual, "X = 0");
  if (is_scalar_class(x)) fail(ErrorCode::ScalarDual, "X is a scalar multiple of the identity");
  const Matrix sq = to_square(x);
  const Matrix a = left_witness(sq);
  const Matrix bt = left_witness(transpose(sq, n));
  return {from_square(alg, a), from_square(alg, transpose(bt, n))};
}

// ---------------------------------------------------------------------------

Codim1Report classify_codim1(std::size_t n, std::uint32_t q, const ScanOptions& opts) {
  const Algebra alg = from_matrix_algebra(n, FieldSpec::prime(q));
  const ff::FastAlgebra fast(alg);
  const IdempotentIndex index = IdempotentIndex::build(fast, opts);
  const std::size_t d = alg.dim();
  const std::uint64_t codes = *ff::checked_power(q, d);

  struct Part {
    std::uint64_t total = 0;
    std::array<std::uint64_t, 4> per_theta{};
    std::vector<ff::Vec> survivors;
  };
  std::vector<Part> parts(chunk_count(codes, opts.jobs));
  parallel_chunks(codes, opts.jobs, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    Part& part = parts[chunk];
    ff::Vec x(d), f(d);
    for (std::uint64_t code = begin; code < end; ++code) {
      ff::decode(code, d, q, x.data());
      std::size_t lead = 0;
      while (lead < d && x[lead] == 0) ++lead;
      if (lead == d || x[lead] != 1) continue;
      ++part.total;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) f[i * n + j] = x[j * n + i];
      }
      const ff::FastSubspace h = ff::FastSubspace::from_annihilator(q, d, {f});
      bool any = false;
      for (std::size_t t = 0; t < kAllThetas.size(); ++t) {
        if (!decide_with_index(fast, index, h, kAllThetas[t])) {
          ++part.per_theta[t];
          any = true;
        }
      }
      if (any) part.survivors.push_back(x);
    }
  });

  Codim1Report report;
  report.n = n;
  report.q = q;
  for (const auto& part : parts) {
    report.total += part.total;
    for (std::size_t t = 0; t < 4; ++t) report.per_theta[t] += part.per_theta[t];
    for (const auto& x : part.survivors) report.representatives.push_back(alg.element(ff::to_vector(x, alg.field())));
  }
  return report;
}

LinesReport classify_lines(std::size_t n, std::uint32_t q, bool with_oracle, const ScanOptions& opts) {
  const Algebra alg = from_matrix_algebra(n, FieldSpec::prime(q));
  const std::size_t d = alg.dim();
  auto codes = ff::checked_power(q, d);
  if (!codes || *codes > opts.max_scan) {
    fail(ErrorCode::TooLarge, "M_" + std::to_string(n) + "(F_" + std::to_string(q) + ") exceeds the scan limit");
  }
  LinesReport report;
  report.n = n;
  report.q = q;
  report.oracle_checked = with_oracle;
  report.oracle_agrees = true;
  ff::Vec x(d);
  for (std::uint64_t code = 0; code < *codes; ++code) {
    ff::decode(code, d, q, x.data());
    std::size_t lead = 0;
    while (lead < d && x[lead] == 0) ++lead;
    if (lead == d || x[lead] != 1) continue;
    ++report.total;
    const Element a = alg.element(ff::to_vector(x, alg.field()));
    if (is_quasi_idempotent(a)) ++report.quasi_idempotent;
    const Subspace line = Subspace::span(alg, std::vector<Element>{a});
    for (std::size_t t = 0; t < 4; ++t) {
      const bool verdict = line_is_mathieu(a, kAllThetas[t]);
      if (verdict) ++report.per_theta[t];
      if (with_oracle && oracle_mathieu(line, kAllThetas[t], opts) != verdict) report.oracle_agrees = false;
    }
  }
  report.consistent = true;
  for (auto c : report.per_theta) report.consistent &= c == report.total - report.quasi_idempotent;
  return report;
}

bool check_proper_subspace_criterion(const Subspace& v, const ScanOptions& opts) {
  const Algebra& a = v.ambient();
  require_matrix_order(a);
  if (v.is_whole()) fail(ErrorCode::NotProper, "the subspace is the whole algebra");
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteField, "idempotent scan needs a finite field");
  const ff::FastAlgebra alg(a);
  const ff::FastSubspace fv = v.fast();
  bool has_idempotent = false;
  auto in_v = ff::checked_power(alg.p(), v.dim());
  if (in_v && *in_v <= opts.max_scan) {
    ff::Vec sq(a.dim());
    fv.for_each_vector([&](const ff::Vec& x) {
      if (std::all_of(x.begin(), x.end(), [](ff::Word w) { return w == 0; })) return true;
      alg.mul(x.data(), x.data(), sq.data());
      has_idempotent = sq == x;
      return !has_idempotent;
    });
  } else {
    const IdempotentIndex index = IdempotentIndex::build(alg, opts);
    for (const auto& e : index.nonzero()) {
      if (fv.contains(e)) {
        has_idempotent = true;
        break;
      }
    }
  }
  const bool verdict = !has_idempotent;
  if (decide_mathieu(v, Theta::TwoSided, opts).is_mathieu != verdict) {
    fail(ErrorCode::Internal, "idempotent-free criterion disagrees with the two-sided decision");
  }
  return verdict;
}

}  // namespace mk
