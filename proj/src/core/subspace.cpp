#include "subspace.hpp"

#include <gmpxx.h>

#include <limits>

namespace mk {

std::string_view theta_name(Theta t) noexcept {
  switch (t) {
    case Theta::Left: return "left";
    case Theta::Right: return "right";
    case Theta::PreTwoSided: return "pre_two_sided";
    case Theta::TwoSided: return "two_sided";
  }
  return "?";
}

Theta parse_theta(std::string_view text) {
  for (Theta t : kAllThetas) {
    if (theta_name(t) == text) return t;
  }
  fail(ErrorCode::InvalidArgument,
       "unknown theta '" + std::string(text) + "' (expected left, right, pre_two_sided, two_sided)");
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const Algebra& ambient, std::vector<Vector> generators) {
  for (const auto& g : generators) {
    if (g.size() != ambient.dim()) fail(ErrorCode::InvalidArgument, "generator length differs from algebra dimension");
    for (const auto& c : g) {
      if (!ambient.field().contains(c)) fail(ErrorCode::FieldMismatch, "generator entry outside " + ambient.field().name());
    }
  }
  auto pivots = rref_in_place(generators, ambient.dim());
  return Subspace(ambient, std::move(generators), std::move(pivots));
}

Subspace Subspace::span(const Algebra& ambient, const std::vector<Element>& generators) {
  std::vector<Vector> rows;
  for (const auto& g : generators) {
    require_same_algebra(ambient, g.algebra());
    rows.push_back(g.coords());
  }
  return span(ambient, std::move(rows));
}

Subspace Subspace::zero(const Algebra& ambient) { return Subspace(ambient, {}, {}); }

Subspace Subspace::whole(const Algebra& ambient) {
  Matrix rows;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < ambient.dim(); ++i) {
    rows.push_back(unit_vector(ambient.field(), ambient.dim(), i));
    pivots.push_back(i);
  }
  return Subspace(ambient, std::move(rows), std::move(pivots));
}

Subspace Subspace::from_rref(const Algebra& ambient, Matrix rref, std::vector<std::size_t> pivots) {
  return Subspace(ambient, std::move(rref), std::move(pivots));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_.dim()) fail(ErrorCode::InvalidArgument, "vector length differs from algebra dimension");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (r[pivots_[i]].is_zero()) continue;
    const Scalar f = -r[pivots_[i]];
    axpy(r, f, basis_[i]);
  }
  return mk::is_zero(r);
}

bool Subspace::contains(const Element& a) const {
  require_same_algebra(ambient_, a.algebra());
  return contains(a.coords());
}

bool Subspace::contains(const Subspace& w) const {
  require_same_algebra(ambient_, w.ambient_);
  for (const auto& row : w.basis_) {
    if (!contains(row)) return false;
  }
  return true;
}

ff::FastSubspace Subspace::fast() const {
  std::vector<ff::Vec> rows;
  for (const auto& r : basis_) rows.push_back(ff::to_vec(r));
  return ff::FastSubspace(ambient_.field().characteristic(), ambient_.dim(), rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  require_same_algebra(a.ambient_, b.ambient_);
  if (a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    if (!equal(a.basis_[i], b.basis_[i])) return false;
  }
  return true;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += Element(ambient_, basis_[i]).to_string();
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

Subspace sum(const Subspace& v, const Subspace& w) {
  require_same_algebra(v.ambient(), w.ambient());
  Matrix rows = v.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(v.ambient(), std::move(rows));
}

Matrix annihilator(const Subspace& v) { return nullspace(v.basis(), v.ambient().dim(), v.ambient().field()); }

Subspace intersect(const Subspace& v, const Subspace& w) {
  require_same_algebra(v.ambient(), w.ambient());
  Matrix constraints = annihilator(v);
  Matrix more = annihilator(w);
  constraints.insert(constraints.end(), more.begin(), more.end());
  const Algebra& a = v.ambient();
  Matrix basis = nullspace(constraints, a.dim(), a.field());
  return Subspace::span(a, std::move(basis));
}

Subspace theta_ideal(const Element& a, Theta theta) {
  const Algebra& alg = a.algebra();
  const std::size_t d = alg.dim();
  std::vector<Vector> gens;
  if (theta == Theta::Left || theta == Theta::PreTwoSided) {
    for (std::size_t i = 0; i < d; ++i) gens.push_back(alg.multiply(unit_vector(alg.field(), d, i), a.coords()));
  }
  if (theta == Theta::Right || theta == Theta::PreTwoSided) {
    for (std::size_t i = 0; i < d; ++i) gens.push_back(alg.multiply(a.coords(), unit_vector(alg.field(), d, i)));
  }
  if (theta == Theta::TwoSided) {
    gens.push_back(a.coords());
    for (std::size_t i = 0; i < d; ++i) {
      Vector left = alg.multiply(unit_vector(alg.field(), d, i), a.coords());
      for (std::size_t j = 0; j < d; ++j) gens.push_back(alg.multiply(left, unit_vector(alg.field(), d, j)));
    }
  }
  return Subspace::span(alg, std::move(gens));
}

namespace {

// Linear system {v : f(T v) = 0 for every annihilating f and every map T}.
Subspace solve_absorbing(const Subspace& v, const std::vector<Matrix>& maps) {
  const Algebra& alg = v.ambient();
  const std::size_t d = alg.dim();
  const Matrix ann = annihilator(v);
  Matrix rows;
  for (const auto& t : maps) {
    // t[l] is the image of e_l.
    for (const auto& f : ann) {
      Vector row = zero_vector(alg.field(), d);
      for (std::size_t l = 0; l < d; ++l) row[l] = dot(f, t[l]);
      rows.push_back(std::move(row));
    }
  }
  return Subspace::span(alg, nullspace(rows, d, alg.field()));
}

std::vector<Matrix> left_maps(const Algebra& alg) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Matrix t;
    for (std::size_t l = 0; l < alg.dim(); ++l) t.push_back(alg.basis_product(i, l));
    maps.push_back(std::move(t));
  }
  return maps;
}

std::vector<Matrix> right_maps(const Algebra& alg) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Matrix t;
    for (std::size_t l = 0; l < alg.dim(); ++l) t.push_back(alg.basis_product(l, i));
    maps.push_back(std::move(t));
  }
  return maps;
}

std::vector<Matrix> two_sided_maps(const Algebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix t;
      for (std::size_t l = 0; l < d; ++l) t.push_back(alg.multiply(alg.basis_product(i, l), unit_vector(alg.field(), d, j)));
      maps.push_back(std::move(t));
    }
  }
  return maps;
}

}  // namespace

Subspace max_theta_ideal(const Subspace& v, Theta theta) {
  const Algebra& alg = v.ambient();
  switch (theta) {
    case Theta::Left: return solve_absorbing(v, left_maps(alg));
    case Theta::Right: return solve_absorbing(v, right_maps(alg));
    case Theta::PreTwoSided: return sum(solve_absorbing(v, left_maps(alg)), solve_absorbing(v, right_maps(alg)));
    case Theta::TwoSided: return solve_absorbing(v, two_sided_maps(alg));
  }
  fail(ErrorCode::Internal, "unreachable theta");
}

bool is_theta_ideal(const Subspace& v, Theta theta) {
  const Algebra& alg = v.ambient();
  const std::size_t d = alg.dim();
  const bool left = theta != Theta::Right;
  const bool right = theta != Theta::Left;
  for (const auto& row : v.basis()) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vector e = unit_vector(alg.field(), d, i);
      if (left && !v.contains(alg.multiply(e, row))) return false;
      if (right && !v.contains(alg.multiply(row, e))) return false;
    }
  }
  return true;
}

Subspace preimage(const AlgebraMap& phi, const Subspace& v) {
  require_same_algebra(phi.codomain(), v.ambient());
  const Algebra& dom = phi.domain();
  Matrix rows = mat_mul(annihilator(v), phi.matrix());
  if (rows.empty()) return Subspace::whole(dom);
  return Subspace::span(dom, nullspace(rows, dom.dim(), dom.field()));
}

Subspace image(const AlgebraMap& phi, const Subspace& v) {
  require_same_algebra(phi.domain(), v.ambient());
  Matrix rows;
  for (const auto& r : v.basis()) rows.push_back(mat_vec(phi.matrix(), r));
  return Subspace::span(phi.codomain(), std::move(rows));
}

Quotient quotient_algebra(const Subspace& ideal) {
  const Algebra& a = ideal.ambient();
  const std::size_t d = a.dim();
  const FieldSpec f = a.field();
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const Vector& x = ideal.basis()[r];
    for (std::size_t i = 0; i < d; ++i) {
      const Vector e = unit_vector(f, d, i);
      if (!ideal.contains(a.multiply(e, x))) {
        fail(ErrorCode::NotAnIdeal, "e" + std::to_string(i) + " * " + Element(a, x).to_string() + " leaves the subspace");
      }
      if (!ideal.contains(a.multiply(x, e))) {
        fail(ErrorCode::NotAnIdeal, Element(a, x).to_string() + " * e" + std::to_string(i) + " leaves the subspace");
      }
    }
  }
  if (ideal.is_whole()) fail(ErrorCode::InvalidArgument, "quotient by the whole algebra is the zero ring");

  std::vector<bool> is_pivot(d, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) complement.push_back(c);
  }
  const std::size_t qd = complement.size();
  auto project = [&](Vector x) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Scalar c = x[ideal.pivots()[r]];
      if (!c.is_zero()) axpy(x, -c, ideal.basis()[r]);
    }
    Vector out;
    out.reserve(qd);
    for (auto c : complement) out.push_back(x[c]);
    return out;
  };

  StructureTable table(qd, std::vector<Vector>(qd));
  for (std::size_t i = 0; i < qd; ++i) {
    for (std::size_t j = 0; j < qd; ++j) table[i][j] = project(a.basis_product(complement[i], complement[j]));
  }
  Algebra q = Algebra::make(f, std::move(table), project(a.unit()), a.label() + "/I", false);

  Matrix m(qd, zero_vector(f, d));
  for (std::size_t j = 0; j < d; ++j) {
    Vector col = project(unit_vector(f, d, j));
    for (std::size_t k = 0; k < qd; ++k) m[k][j] = col[k];
  }
  AlgebraMap pi = AlgebraMap::make(a, q, std::move(m));
  return {std::move(q), std::move(pi), std::move(complement)};
}

// ---------------------------------------------------------------------------

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t d, std::size_t r) {
  if (r > d) return 0;
  mpz_class num = 1, den = 1, qq = q;
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), d - i);
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  mpz_class out = num / den;
  if (out > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return std::stoull(out.get_str());
}

namespace {

struct SubspaceWalker {
  const Algebra& alg;
  ff::Word p;
  std::size_t d;
  std::size_t r;
  const std::function<bool(const Subspace&)>& visit;
  std::vector<ff::Vec> rows;
  std::vector<std::size_t> pivots;

  // Columns zero in every chosen row, strictly after `after`.
  std::size_t free_after(std::size_t after) const {
    std::size_t count = 0;
    for (std::size_t c = after + 1; c < d; ++c) {
      bool zero = true;
      for (const auto& row : rows) {
        if (row[c]) {
          zero = false;
          break;
        }
      }
      if (zero) ++count;
    }
    return count;
  }

  bool emit() {
    Matrix basis;
    for (const auto& row : rows) basis.push_back(ff::to_vector(row, alg.field()));
    return visit(Subspace::from_rref(alg, std::move(basis), pivots));
  }

  bool column_free(std::size_t c) const {
    for (const auto& row : rows) {
      if (row[c]) return false;
    }
    return true;
  }

  // Chooses row `i`; returns false once the visitor asks to stop.
  bool descend(std::size_t i) {
    if (i == r) return emit();
    const std::size_t remaining = r - i - 1;
    const std::size_t lowest = i == 0 ? 0 : pivots.back() + 1;
    for (std::size_t c = d; c-- > lowest;) {
      if (!column_free(c)) continue;
      // Free positions of this row: after c, not an earlier pivot.
      std::vector<std::size_t> slots;
      for (std::size_t k = c + 1; k < d; ++k) {
        bool earlier_pivot = false;
        for (auto pv : pivots) earlier_pivot |= pv == k;
        if (!earlier_pivot) slots.push_back(k);
      }
      if (slots.size() < remaining) continue;
      ff::Vec row(d, 0);
      row[c] = 1;
      rows.push_back(row);
      pivots.push_back(c);
      while (true) {
        rows.back() = row;
        if (free_after(c) >= remaining && !descend(i + 1)) return false;
        std::size_t s = slots.size();
        bool done = true;
        while (s > 0) {
          --s;
          if (++row[slots[s]] < p) {
            done = false;
            break;
          }
          row[slots[s]] = 0;
        }
        if (done) break;
      }
      rows.pop_back();
      pivots.pop_back();
    }
    return true;
  }
};

}  // namespace

void enumerate_subspaces(const Algebra& a, std::size_t r, const std::function<bool(const Subspace&)>& visit,
                         std::uint64_t limit) {
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteField, "subspace enumeration needs a finite field");
  if (r > a.dim()) fail(ErrorCode::InvalidArgument, "subspace dimension exceeds algebra dimension");
  const std::uint64_t count = gaussian_binomial(a.field().characteristic(), a.dim(), r);
  if (count > limit) {
    fail(ErrorCode::TooLarge, std::to_string(count) + " subspaces of dimension " + std::to_string(r) +
                                  " exceed the limit " + std::to_string(limit));
  }
  SubspaceWalker walker{a, a.field().characteristic(), a.dim(), r, visit, {}, {}};
  walker.descend(0);
}

std::vector<Subspace> all_subspaces(const Algebra& a, std::size_t r, std::uint64_t limit) {
  std::vector<Subspace> out;
  enumerate_subspaces(
      a, r,
      [&](const Subspace& s) {
        out.push_back(s);
        return true;
      },
      limit);
  return out;
}

}  // namespace mk
