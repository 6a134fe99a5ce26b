#include "algebra.hpp"

#include <map>

namespace mk {

namespace {

std::string triple_text(std::size_t i, std::size_t j, std::size_t k) {
  return "(e" + std::to_string(i) + ", e" + std::to_string(j) + ", e" + std::to_string(k) + ")";
}

// Coordinates of x * e_k and e_k * x, straight from the table.
Vector times_basis_right(const StructureTable& t, const Vector& x, std::size_t k, FieldSpec f) {
  Vector out = zero_vector(f, x.size());
  for (std::size_t l = 0; l < x.size(); ++l) axpy(out, x[l], t[l][k]);
  return out;
}

Vector times_basis_left(const StructureTable& t, std::size_t k, const Vector& x, FieldSpec f) {
  Vector out = zero_vector(f, x.size());
  for (std::size_t l = 0; l < x.size(); ++l) axpy(out, x[l], t[k][l]);
  return out;
}

std::optional<std::size_t> detect_matrix_order(FieldSpec f, const StructureTable& t, const Vector& unit) {
  const std::size_t d = t.size();
  std::size_t n = 1;
  while (n * n < d) ++n;
  if (n * n != d) return std::nullopt;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t e = 0; e < n; ++e) {
          const Vector& prod = t[matrix_unit_index(n, a, b)][matrix_unit_index(n, c, e)];
          for (std::size_t l = 0; l < d; ++l) {
            bool want_one = (b == c) && l == matrix_unit_index(n, a, e);
            if (want_one ? !prod[l].is_one() : !prod[l].is_zero()) return std::nullopt;
          }
        }
      }
    }
  }
  for (std::size_t l = 0; l < d; ++l) {
    bool diagonal = (l / n) == (l % n);
    if (diagonal ? !unit[l].is_one() : !unit[l].is_zero()) return std::nullopt;
  }
  (void)f;
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Algebra Algebra::build(FieldSpec field, StructureTable table, Vector unit, std::string label) {
  auto data = std::make_shared<Data>();
  const std::size_t d = table.size();
  data->field = field;
  data->dim = d;
  data->sparse.resize(d * d);
  bool commutative = true;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto& terms = data->sparse[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        if (!table[i][j][k].is_zero()) terms.push_back({static_cast<std::uint32_t>(k), table[i][j][k]});
      }
      if (j < i && !equal(table[i][j], table[j][i])) commutative = false;
    }
  }
  data->commutative = commutative;
  data->matrix_order = detect_matrix_order(field, table, unit);
  data->table = std::move(table);
  data->unit = std::move(unit);
  data->label = std::move(label);
  return Algebra(std::move(data));
}

Algebra Algebra::make(FieldSpec field, StructureTable table, Vector unit, std::string label, bool check) {
  const std::size_t d = table.size();
  if (d == 0) fail(ErrorCode::InvalidArgument, "algebra dimension must be at least 1");
  for (std::size_t i = 0; i < d; ++i) {
    if (table[i].size() != d) fail(ErrorCode::InvalidArgument, "structure table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < d; ++j) {
      if (table[i][j].size() != d) {
        fail(ErrorCode::InvalidArgument,
             "product e" + std::to_string(i) + "*e" + std::to_string(j) + " has wrong length");
      }
      for (const auto& c : table[i][j]) {
        if (!field.contains(c)) fail(ErrorCode::FieldMismatch, "structure constant outside " + field.name());
      }
    }
  }
  if (unit.size() != d) fail(ErrorCode::InvalidArgument, "unit has wrong length");
  for (const auto& c : unit) {
    if (!field.contains(c)) fail(ErrorCode::FieldMismatch, "unit coordinate outside " + field.name());
  }

  if (check) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          Vector left = times_basis_right(table, table[i][j], k, field);
          Vector right = times_basis_left(table, i, table[j][k], field);
          if (!equal(left, right)) {
            fail(ErrorCode::NotAssociative, "(e_i e_j) e_k != e_i (e_j e_k) at " + triple_text(i, j, k));
          }
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      Vector e = unit_vector(field, d, i);
      if (!equal(times_basis_right(table, unit, i, field), e) || !equal(times_basis_left(table, i, unit, field), e)) {
        fail(ErrorCode::BadUnit, "unit law fails at basis index " + std::to_string(i));
      }
    }
  }
  return build(field, std::move(table), std::move(unit), std::move(label));
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dim();
  Vector out = zero_vector(field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& term : data_->sparse[i * d + j]) out[term.index] += ab * term.coeff;
    }
  }
  return out;
}

Element Algebra::element(Vector coords) const { return Element(*this, std::move(coords)); }
Element Algebra::basis(std::size_t i) const { return Element(*this, unit_vector(field(), dim(), i)); }
Element Algebra::zero() const { return Element(*this, zero_vector(field(), dim())); }
Element Algebra::one() const { return Element(*this, unit()); }

bool Algebra::same_as(const Algebra& other) const {
  if (data_ == other.data_) return true;
  if (field() != other.field() || dim() != other.dim()) return false;
  if (!equal(unit(), other.unit())) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!equal(data_->table[i][j], other.data_->table[i][j])) return false;
    }
  }
  return true;
}

Algebra Algebra::relabeled(std::string label) const {
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  return Algebra(std::move(data));
}

// ---------------------------------------------------------------------------
// Element

void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (!a.same_as(b)) fail(ErrorCode::AlgebraMismatch, "elements of '" + a.label() + "' and '" + b.label() + "'");
}

Element::Element(Algebra algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) {
    fail(ErrorCode::InvalidArgument, "element has " + std::to_string(coords_.size()) + " coordinates, algebra '" +
                                         algebra_.label() + "' has dimension " + std::to_string(algebra_.dim()));
  }
  for (const auto& c : coords_) {
    if (!algebra_.field().contains(c)) fail(ErrorCode::FieldMismatch, "coordinate outside " + algebra_.field().name());
  }
}

Element Element::operator-() const {
  Vector v;
  v.reserve(coords_.size());
  for (const auto& c : coords_) v.push_back(-c);
  return Element(algebra_, std::move(v));
}

Element operator+(const Element& a, const Element& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  return Element(a.algebra_, add(a.coords_, b.coords_));
}

Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  return Element(a.algebra_, sub(a.coords_, b.coords_));
}

Element operator*(const Element& a, const Element& b) { return elem_mul(a, b); }

Element operator*(const Scalar& c, const Element& a) { return Element(a.algebra_, scaled(c, a.coords_)); }

bool operator==(const Element& a, const Element& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  return equal(a.coords_, b.coords_);
}

std::string Element::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out + "]";
}

Element elem_mul(const Element& a, const Element& b) {
  require_same_algebra(a.algebra(), b.algebra());
  return Element(a.algebra(), a.algebra().multiply(a.coords(), b.coords()));
}

Element elem_power(const Element& a, std::uint64_t m) {
  Element result = a.algebra().one();
  Element base = a;
  while (m > 0) {
    if (m & 1u) result = elem_mul(result, base);
    m >>= 1u;
    if (m > 0) base = elem_mul(base, base);
  }
  return result;
}

Element evaluate(const Poly& f, const Element& a) {
  if (f.field() != a.field()) fail(ErrorCode::FieldMismatch, "polynomial and element over different fields");
  const Algebra& alg = a.algebra();
  Element acc = alg.zero();
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = elem_mul(acc, a) + (*it) * alg.one();
  return acc;
}

// ---------------------------------------------------------------------------
// Constructors

Algebra from_matrix_algebra(std::size_t n, FieldSpec field) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "matrix order must be at least 1");
  const std::size_t d = n * n;
  StructureTable table(d, std::vector<Vector>(d, zero_vector(field, d)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t e = 0; e < n; ++e) {
        table[matrix_unit_index(n, a, b)][matrix_unit_index(n, b, e)][matrix_unit_index(n, a, e)] = field.one();
      }
    }
  }
  Vector unit = zero_vector(field, d);
  for (std::size_t i = 0; i < n; ++i) unit[matrix_unit_index(n, i, i)] = field.one();
  return Algebra::make(field, std::move(table), std::move(unit),
                       "M_" + std::to_string(n) + "(" + field.name() + ")", false);
}

Algebra from_poly_quotient(const Poly& g) {
  if (!g.is_monic()) fail(ErrorCode::NotMonic, "modulus " + g.to_string() + " is not monic");
  if (g.degree() < 1) fail(ErrorCode::InvalidArgument, "modulus must have degree at least 1");
  const FieldSpec field = g.field();
  const auto d = static_cast<std::size_t>(g.degree());
  StructureTable table(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Poly r = Poly::monomial(field.one(), i + j) % g;
      Vector v = zero_vector(field, d);
      for (std::size_t k = 0; k < r.coefficients().size(); ++k) v[k] = r.coefficients()[k];
      table[i][j] = std::move(v);
    }
  }
  return Algebra::make(field, std::move(table), unit_vector(field, d, 0),
                       field.name() + "[t]/(" + g.to_string() + ")", false);
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "direct sum of algebras over different fields");
  const FieldSpec field = a.field();
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  StructureTable table(d, std::vector<Vector>(d, zero_vector(field, d)));
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < da; ++k) table[i][j][k] = a.basis_product(i, j)[k];
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      for (std::size_t k = 0; k < db; ++k) table[da + i][da + j][da + k] = b.basis_product(i, j)[k];
    }
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra::make(field, std::move(table), std::move(unit), a.label() + " (+) " + b.label(), false);
}

Algebra opposite(const Algebra& a) {
  const std::size_t d = a.dim();
  StructureTable table(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) table[i][j] = a.basis_product(j, i);
  }
  return Algebra::make(a.field(), std::move(table), a.unit(), "opp(" + a.label() + ")", false);
}

Algebra field_algebra(FieldSpec field) {
  StructureTable table{{Vector{field.one()}}};
  return Algebra::make(field, std::move(table), Vector{field.one()}, field.name(), false);
}

// ---------------------------------------------------------------------------
// Minimal polynomial and friends

MinPolyData minimal_polynomial(const Element& a) {
  const Algebra& alg = a.algebra();
  const FieldSpec f = alg.field();
  const std::size_t d = alg.dim();
  struct Row {
    std::size_t pivot;
    Vector v;     // reduced power, pivot entry 1
    Vector comb;  // coefficients over 1, a, a^2, ...
  };
  std::vector<Row> rows;
  Vector power = alg.unit();
  for (std::size_t m = 0; m <= d; ++m) {
    Vector v = power;
    Vector comb = zero_vector(f, d + 1);
    comb[m] = f.one();
    for (const auto& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      const Scalar factor = -v[row.pivot];
      axpy(v, factor, row.v);
      axpy(comb, factor, row.comb);
    }
    std::size_t pivot = 0;
    while (pivot < d && v[pivot].is_zero()) ++pivot;
    if (pivot == d) {
      comb.erase(comb.begin() + static_cast<long>(m + 1), comb.end());
      Poly minpoly(f, std::move(comb));
      auto split = poly_split_at_zero(minpoly);
      return {std::move(minpoly), split.k, std::move(split.h)};
    }
    const Scalar inv = v[pivot].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : comb) x *= inv;
    rows.push_back({pivot, std::move(v), std::move(comb)});
    power = alg.multiply(power, a.coords());
  }
  fail(ErrorCode::Internal, "no linear dependence among the first dim+1 powers");
}

bool is_idempotent(const Element& a) { return elem_mul(a, a) == a; }

bool is_quasi_idempotent(const Element& a) {
  if (a.is_zero()) return true;
  const Element sq = elem_mul(a, a);
  const auto& c = a.coords();
  std::size_t i = 0;
  while (c[i].is_zero()) ++i;
  const Scalar r = sq.coords()[i] / c[i];
  return !r.is_zero() && sq == r * a;
}

ElementClass classify_element(const Element& a) {
  ElementClass out;
  const MinPolyData mp = minimal_polynomial(a);
  out.degree = static_cast<std::size_t>(mp.minpoly.degree());
  out.invertible = mp.k == 0;
  out.nilpotent = mp.k > 0 && mp.h.degree() == 0;
  const Element sq = elem_mul(a, a);
  out.idempotent = sq == a;
  if (a.is_zero()) {
    out.quasi_idempotent = true;
    return out;
  }
  const auto& c = a.coords();
  std::size_t i = 0;
  while (c[i].is_zero()) ++i;
  const Scalar r = sq.coords()[i] / c[i];
  if (!r.is_zero() && sq == r * a) {
    out.quasi_idempotent = true;
    out.ratio = r;
  }
  return out;
}

PofA build_p_of_a(const Element& a) {
  const MinPolyData mp = minimal_polynomial(a);
  if (mp.k == 0) fail(ErrorCode::InvertibleInput, "element is invertible (minimal polynomial " + mp.minpoly.to_string() + ")");
  if (mp.h.degree() == 0) fail(ErrorCode::NilpotentInput, "element is nilpotent (minimal polynomial " + mp.minpoly.to_string() + ")");
  const FieldSpec f = a.field();
  const Poly tk = Poly::monomial(f.one(), mp.k);
  BezoutResult bz = poly_ext_gcd(tk, mp.h);
  if (bz.gcd.degree() != 0) fail(ErrorCode::Internal, "t^k and h(t) are not coprime");
  Poly p = tk * bz.u % mp.minpoly;
  Element value = evaluate(p, a);
  return {mp.k, std::move(bz.u), std::move(bz.v), std::move(p), std::move(value)};
}

CycleInfo power_cycle(const Element& a, std::uint64_t max_steps) {
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteField, "power cycle requires a finite field");
  auto key = [](const Element& x) {
    std::vector<std::uint32_t> k;
    k.reserve(x.coords().size());
    for (const auto& c : x.coords()) k.push_back(c.residue_value());
    return k;
  };
  std::map<std::vector<std::uint32_t>, std::uint64_t> seen;
  Element power = a;
  for (std::uint64_t m = 1; m <= max_steps; ++m) {
    auto [it, inserted] = seen.emplace(key(power), m);
    if (!inserted) return {it->second, m - it->second};
    power = elem_mul(power, a);
  }
  fail(ErrorCode::TooLarge, "power sequence did not repeat within " + std::to_string(max_steps) + " steps");
}

// ---------------------------------------------------------------------------
// AlgebraMap

AlgebraMap AlgebraMap::make(Algebra domain, Algebra codomain, Matrix matrix) {
  const std::size_t da = domain.dim(), db = codomain.dim();
  if (domain.field() != codomain.field()) fail(ErrorCode::FieldMismatch, "map between algebras over different fields");
  if (matrix.size() != db) fail(ErrorCode::InvalidArgument, "map matrix must have dim(codomain) rows");
  for (const auto& row : matrix) {
    if (row.size() != da) fail(ErrorCode::InvalidArgument, "map matrix must have dim(domain) columns");
    for (const auto& c : row) {
      if (!domain.field().contains(c)) fail(ErrorCode::FieldMismatch, "map entry outside " + domain.field().name());
    }
  }
  AlgebraMap phi(std::move(domain), std::move(codomain), std::move(matrix));
  const Algebra& A = phi.domain_;
  const Algebra& B = phi.codomain_;
  std::vector<Vector> images;
  images.reserve(da);
  for (std::size_t i = 0; i < da; ++i) images.push_back(mat_vec(phi.matrix_, unit_vector(A.field(), da, i)));
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      Vector lhs = mat_vec(phi.matrix_, A.basis_product(i, j));
      Vector rhs = B.multiply(images[i], images[j]);
      if (!equal(lhs, rhs)) {
        fail(ErrorCode::NotAHomomorphism,
             "phi(e" + std::to_string(i) + "*e" + std::to_string(j) + ") != phi(e" + std::to_string(i) + ")*phi(e" +
                 std::to_string(j) + ")");
      }
    }
  }
  if (!equal(mat_vec(phi.matrix_, A.unit()), B.unit())) fail(ErrorCode::NotAHomomorphism, "phi does not preserve the unit");
  return phi;
}

AlgebraMap AlgebraMap::identity(const Algebra& a) {
  Matrix m;
  for (std::size_t i = 0; i < a.dim(); ++i) m.push_back(unit_vector(a.field(), a.dim(), i));
  return AlgebraMap(a, a, std::move(m));
}

Element AlgebraMap::apply(const Element& x) const {
  require_same_algebra(x.algebra(), domain_);
  return Element(codomain_, mat_vec(matrix_, x.coords()));
}

}  // namespace mk
