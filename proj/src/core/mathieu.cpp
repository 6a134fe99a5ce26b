#include "mathieu.hpp"

#include <atomic>

#include "parallel.hpp"

namespace mk {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::IdempotentCriterion: return "idempotent_criterion";
    case Method::Oracle: return "oracle";
    case Method::LineRule: return "line_rule";
    case Method::CommutativeRadical: return "commutative_radical";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::IdempotentCriterion, Method::Oracle, Method::LineRule, Method::CommutativeRadical}) {
    if (method_name(m) == text) return m;
  }
  fail(ErrorCode::InvalidArgument, "unknown method '" + std::string(text) + "'");
}

namespace {

std::uint64_t require_scan(const Algebra& a, const ScanOptions& opts, std::string_view what) {
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteField, std::string(what) + " needs a finite field");
  auto total = ff::checked_power(a.field().characteristic(), a.dim());
  if (!total || *total > opts.max_scan) {
    fail(ErrorCode::TooLarge, std::string(what) + " would scan " + a.field().name() + "^" + std::to_string(a.dim()) +
                                  " elements, above the limit " + std::to_string(opts.max_scan));
  }
  return *total;
}

// Bitmaps pay off once many lookups hit the same subspace.
constexpr std::uint64_t kBitmapCodes = std::uint64_t(1) << 24;

// Scalar version of check_idempotent, used over Q.
std::optional<Witness> generic_check(const Subspace& v, const Vector& e, Theta theta) {
  const Algebra& alg = v.ambient();
  const std::size_t d = alg.dim();
  const FieldSpec f = alg.field();
  if (theta == Theta::Left || theta == Theta::PreTwoSided) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector b = unit_vector(f, d, i);
      Vector prod = alg.multiply(b, e);
      if (!v.contains(prod)) return Witness{e, b, std::nullopt, prod};
    }
  }
  if (theta == Theta::Right || theta == Theta::PreTwoSided) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = unit_vector(f, d, j);
      Vector prod = alg.multiply(e, c);
      if (!v.contains(prod)) return Witness{e, std::nullopt, c, prod};
    }
  }
  if (theta == Theta::TwoSided) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector b = unit_vector(f, d, i);
      Vector left = alg.multiply(b, e);
      for (std::size_t j = 0; j < d; ++j) {
        Vector c = unit_vector(f, d, j);
        Vector prod = alg.multiply(left, c);
        if (!v.contains(prod)) return Witness{e, b, c, prod};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Radical

bool radical_member(const Subspace& v, const Element& a) {
  require_same_algebra(v.ambient(), a.algebra());
  const MinPolyData mp = minimal_polynomial(a);
  if (mp.h.degree() == 0) return true;
  const std::size_t start = std::max<std::size_t>(mp.k, 1);
  const auto window = static_cast<std::size_t>(mp.h.degree());
  Element power = elem_power(a, start);
  for (std::size_t m = 0; m < window; ++m) {
    if (!v.contains(power)) return false;
    power = elem_mul(power, a);
  }
  return true;
}

bool radical_member_fast(const ff::FastAlgebra& alg, const ff::FastSubspace& v, const ff::Vec& a) {
  const ff::FastMinPoly mp = ff::fast_minimal_polynomial(alg, a);
  if (mp.h_degree == 0) return true;
  const std::size_t start = std::max<std::size_t>(mp.k, 1);
  ff::Vec power = a, next(alg.dim());
  for (std::size_t m = 1; m < start; ++m) {
    alg.mul(power.data(), a.data(), next.data());
    power.swap(next);
  }
  for (std::size_t m = 0; m < mp.h_degree; ++m) {
    if (!v.contains(power)) return false;
    alg.mul(power.data(), a.data(), next.data());
    power.swap(next);
  }
  return true;
}

std::vector<Element> radical_enumerate(const Subspace& v, const ScanOptions& opts) {
  const Algebra& a = v.ambient();
  const std::uint64_t total = require_scan(a, opts, "radical enumeration");
  const ff::FastAlgebra alg(a);
  ff::FastSubspace fv = v.fast();
  fv.build_bitmap(kBitmapCodes);
  const std::size_t d = a.dim();
  const ff::Word p = alg.p();
  std::vector<std::vector<ff::Vec>> parts(chunk_count(total, opts.jobs));
  parallel_chunks(total, opts.jobs, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    ff::Vec x(d);
    for (std::uint64_t code = begin; code < end; ++code) {
      ff::decode(code, d, p, x.data());
      const bool window = radical_member_fast(alg, fv, x);
      const ff::FastCycle cyc = ff::fast_power_cycle(alg, x, opts.max_scan);
      bool tail = true;
      for (std::uint64_t m = cyc.preperiod; m < cyc.preperiod + cyc.period && tail; ++m) tail = fv.contains(cyc.power(m));
      if (window != tail) {
        fail(ErrorCode::Internal, "window and cycle definitions of the radical disagree at " +
                                      Element(a, ff::to_vector(x, a.field())).to_string());
      }
      if (window) parts[chunk].push_back(x);
    }
  });
  std::vector<Element> out;
  for (const auto& part : parts) {
    for (const auto& x : part) out.push_back(a.element(ff::to_vector(x, a.field())));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Idempotent criterion

std::optional<FastWitness> check_idempotent(const ff::FastAlgebra& alg, const ff::FastSubspace& v, const ff::Vec& e,
                                            Theta theta) {
  const std::size_t d = alg.dim();
  ff::Vec out(d), left(d);
  if (theta == Theta::Left || theta == Theta::PreTwoSided) {
    for (std::size_t i = 0; i < d; ++i) {
      alg.left_basis(i, e.data(), out.data());
      if (!v.contains(out)) return FastWitness{e, static_cast<long>(i), -1, out};
    }
  }
  if (theta == Theta::Right || theta == Theta::PreTwoSided) {
    for (std::size_t j = 0; j < d; ++j) {
      alg.right_basis(e.data(), j, out.data());
      if (!v.contains(out)) return FastWitness{e, -1, static_cast<long>(j), out};
    }
  }
  if (theta == Theta::TwoSided) {
    for (std::size_t i = 0; i < d; ++i) {
      alg.left_basis(i, e.data(), left.data());
      for (std::size_t j = 0; j < d; ++j) {
        alg.right_basis(left.data(), j, out.data());
        if (!v.contains(out)) return FastWitness{e, static_cast<long>(i), static_cast<long>(j), out};
      }
    }
  }
  return std::nullopt;
}

IdempotentIndex IdempotentIndex::build(const ff::FastAlgebra& alg, const ScanOptions& opts) {
  const std::uint64_t total = require_scan(alg.source(), opts, "idempotent scan");
  const std::size_t d = alg.dim();
  const ff::Word p = alg.p();
  std::vector<std::vector<ff::Vec>> parts(chunk_count(total, opts.jobs));
  parallel_chunks(total, opts.jobs, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    ff::Vec x(d), sq(d);
    if (begin < end) ff::decode(begin, d, p, x.data());
    for (std::uint64_t code = begin; code < end; ++code) {
      if (code != 0) {
        alg.mul(x.data(), x.data(), sq.data());
        if (sq == x) parts[chunk].push_back(x);
      }
      for (std::size_t i = d; i > 0; --i) {
        if (++x[i - 1] < p) break;
        x[i - 1] = 0;
      }
    }
  });
  IdempotentIndex index;
  for (auto& part : parts) {
    for (auto& x : part) index.idempotents_.push_back(std::move(x));
  }
  return index;
}

std::optional<FastWitness> decide_with_index(const ff::FastAlgebra& alg, const IdempotentIndex& index,
                                             const ff::FastSubspace& v, Theta theta) {
  for (const auto& e : index.nonzero()) {
    if (!v.contains(e)) continue;
    if (auto w = check_idempotent(alg, v, e, theta)) return w;
  }
  return std::nullopt;
}

MathieuVerdict to_verdict(const Algebra& a, Theta theta, const std::optional<FastWitness>& w) {
  MathieuVerdict out;
  out.theta = theta;
  out.method = Method::IdempotentCriterion;
  out.is_mathieu = !w.has_value();
  if (w) {
    const FieldSpec f = a.field();
    Witness wit{ff::to_vector(w->e, f), std::nullopt, std::nullopt, ff::to_vector(w->product, f)};
    if (w->b >= 0) wit.b = unit_vector(f, a.dim(), static_cast<std::size_t>(w->b));
    if (w->c >= 0) wit.c = unit_vector(f, a.dim(), static_cast<std::size_t>(w->c));
    out.witness = std::move(wit);
  }
  return out;
}

MathieuVerdict decide_mathieu(const Subspace& v, Theta theta, const ScanOptions& opts) {
  const Algebra& a = v.ambient();
  MathieuVerdict out;
  out.theta = theta;
  out.method = Method::IdempotentCriterion;
  if (v.is_zero() || v.is_whole()) {
    out.is_mathieu = true;
    return out;
  }

  if (!a.field().is_finite()) {
    if (v.dim() == 1) {
      const Element x = a.element(v.basis()[0]);
      out.method = Method::LineRule;
      out.is_mathieu = line_is_mathieu(x, theta);
      if (!out.is_mathieu) {
        const ElementClass cls = classify_element(x);
        const Element e = cls.ratio->inverse() * x;
        auto w = generic_check(v, e.coords(), theta);
        if (!w) fail(ErrorCode::Internal, "line rule refuted a line without a violating product");
        out.witness = std::move(w);
      }
      return out;
    }
    if (v.contains(a.unit())) {
      auto w = generic_check(v, a.unit(), theta);
      if (!w) fail(ErrorCode::Internal, "proper subspace containing 1 absorbed every product");
      out.is_mathieu = false;
      out.witness = std::move(w);
      return out;
    }
    fail(ErrorCode::InfiniteFieldNoDecision,
         "over Q only lines, trivial subspaces and subspaces containing 1 are decided");
  }

  const ff::FastAlgebra alg(a);
  const ff::FastSubspace fv = v.fast();
  const ff::Word p = alg.p();
  auto in_v = ff::checked_power(p, v.dim());
  if (in_v && *in_v <= opts.max_scan) {
    std::optional<FastWitness> found;
    ff::Vec sq(a.dim());
    fv.for_each_vector([&](const ff::Vec& x) {
      bool zero = true;
      for (auto c : x) zero &= c == 0;
      if (zero) return true;
      alg.mul(x.data(), x.data(), sq.data());
      if (sq != x) return true;
      found = check_idempotent(alg, fv, x, theta);
      return !found.has_value();
    });
    return to_verdict(a, theta, found);
  }
  auto whole = ff::checked_power(p, a.dim());
  if (whole && *whole <= opts.max_scan) {
    const IdempotentIndex index = IdempotentIndex::build(alg, opts);
    return to_verdict(a, theta, decide_with_index(alg, index, fv, theta));
  }
  fail(ErrorCode::TooLarge, "neither the subspace (" + std::to_string(p) + "^" + std::to_string(v.dim()) +
                                ") nor the algebra fits the scan limit " + std::to_string(opts.max_scan));
}

bool verify_witness(const Subspace& v, Theta theta, const Witness& w) {
  const Algebra& a = v.ambient();
  const std::size_t d = a.dim();
  auto fits = [&](const Vector& x) {
    if (x.size() != d) return false;
    for (const auto& c : x) {
      if (!a.field().contains(c)) return false;
    }
    return true;
  };
  if (!fits(w.e) || !fits(w.product)) return false;
  if (w.b && !fits(*w.b)) return false;
  if (w.c && !fits(*w.c)) return false;
  switch (theta) {
    case Theta::Left:
      if (!w.b || w.c) return false;
      break;
    case Theta::Right:
      if (w.b || !w.c) return false;
      break;
    case Theta::PreTwoSided:
      if (w.b.has_value() == w.c.has_value()) return false;
      break;
    case Theta::TwoSided:
      if (!w.b || !w.c) return false;
      break;
  }
  if (!v.contains(w.e)) return false;
  if (!equal(a.multiply(w.e, w.e), w.e)) return false;
  Vector prod = w.e;
  if (w.b) prod = a.multiply(*w.b, prod);
  if (w.c) prod = a.multiply(prod, *w.c);
  return equal(prod, w.product) && !v.contains(prod);
}

// ---------------------------------------------------------------------------
// Oracle

bool oracle_mathieu(const Subspace& v, Theta theta, const ScanOptions& opts) {
  const Algebra& a = v.ambient();
  const std::uint64_t total = require_scan(a, opts, "oracle");
  const ff::FastAlgebra alg(a);
  ff::FastSubspace fv = v.fast();
  fv.build_bitmap(kBitmapCodes);
  const std::size_t d = a.dim();
  const ff::Word p = alg.p();
  const bool left = theta == Theta::Left || theta == Theta::PreTwoSided;
  const bool right = theta == Theta::Right || theta == Theta::PreTwoSided;
  const bool two = theta == Theta::TwoSided;
  std::atomic<bool> refuted{false};
  parallel_chunks(total, opts.jobs, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    ff::Vec x(d), out(d), mid(d);
    for (std::uint64_t code = begin; code < end && !refuted.load(std::memory_order_relaxed); ++code) {
      ff::decode(code, d, p, x.data());
      const ff::FastCycle cyc = ff::fast_power_cycle(alg, x, opts.max_scan);
      bool all_powers = true;
      for (const auto& pw : cyc.powers) {
        if (!fv.contains(pw)) {
          all_powers = false;
          break;
        }
      }
      if (!all_powers) continue;
      for (std::uint64_t m = cyc.preperiod; m < cyc.preperiod + cyc.period; ++m) {
        const ff::Vec& pw = cyc.power(m);
        for (std::size_t i = 0; i < d; ++i) {
          if (left) {
            alg.left_basis(i, pw.data(), out.data());
            if (!fv.contains(out)) refuted = true;
          }
          if (right) {
            alg.right_basis(pw.data(), i, out.data());
            if (!fv.contains(out)) refuted = true;
          }
          if (two) {
            alg.left_basis(i, pw.data(), mid.data());
            for (std::size_t j = 0; j < d; ++j) {
              alg.right_basis(mid.data(), j, out.data());
              if (!fv.contains(out)) refuted = true;
            }
          }
          if (refuted) return;
        }
      }
    }
  });
  return !refuted;
}

// ---------------------------------------------------------------------------
// Certificates

RadicalCertificate certify_radical_membership(const Subspace& m, Theta theta, const Element& a,
                                              const ScanOptions& opts) {
  require_same_algebra(m.ambient(), a.algebra());
  if (!decide_mathieu(m, theta, opts).is_mathieu) {
    fail(ErrorCode::NotMathieu, "the subspace is not a " + std::string(theta_name(theta)) + " Mathieu subspace");
  }
  if (!radical_member(m, a)) fail(ErrorCode::NotInRadical, a.to_string() + " is not in the radical");

  const MinPolyData mp = minimal_polynomial(a);
  const std::uint64_t bound = std::max<std::size_t>(mp.k, 1);
  std::uint64_t n = 0;
  for (std::uint64_t cand = 1; cand <= bound && n == 0; ++cand) {
    const Element b = elem_power(a, cand);
    const auto deg = static_cast<std::size_t>(minimal_polynomial(b).minpoly.degree());
    Element power = b;
    bool all = true;
    for (std::size_t j = 1; j <= deg && all; ++j) {
      all = m.contains(power);
      power = elem_mul(power, b);
    }
    if (all) n = cand;
  }
  if (n == 0) fail(ErrorCode::Internal, "no exponent n with all powers of a^n inside the subspace");
  const std::uint64_t k = minimal_polynomial(elem_power(a, n)).k;
  Element power = a.algebra().one();
  for (std::uint64_t big_n = 0; big_n <= n * k; ++big_n) {
    Subspace ideal = theta_ideal(power, theta);
    if (m.contains(ideal)) return {big_n, std::move(ideal)};
    power = elem_mul(power, a);
  }
  fail(ErrorCode::Internal, "no exponent up to n*k gives an ideal inside the subspace");
}

bool is_mathieu_commutative(const Subspace& v, const ScanOptions& opts) {
  const Algebra& a = v.ambient();
  if (!a.is_commutative()) fail(ErrorCode::NotCommutative, "'" + a.label() + "' is not commutative");
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteFieldNoDecision, "radical enumeration needs a finite field");
  const std::vector<Element> rad = radical_enumerate(v, opts);
  std::vector<Vector> gens;
  for (const auto& x : rad) gens.push_back(x.coords());
  const Subspace w = Subspace::span(a, std::move(gens));
  auto size = ff::checked_power(a.field().characteristic(), w.dim());
  if (!size || *size != rad.size()) return false;
  return is_theta_ideal(w, Theta::TwoSided);
}

bool line_is_mathieu(const Element& a, Theta theta) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "a line needs a nonzero generator");
  if (!is_quasi_idempotent(a)) return true;
  return theta_ideal(a, theta) == Subspace::span(a.algebra(), std::vector<Element>{a});
}

// ---------------------------------------------------------------------------
// Algebra-level

Subspace find_nontrivial_mathieu(const Algebra& a, const ScanOptions& opts) {
  if (a.dim() == 1) fail(ErrorCode::OnlyTrivial, "'" + a.label() + "' has dimension 1");
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteField, "subspace search needs a finite field");
  std::optional<Subspace> found;
  enumerate_subspaces(a, 1, [&](const Subspace& s) {
    if (line_is_mathieu(a.element(s.basis()[0]), Theta::TwoSided)) found = s;
    return !found.has_value();
  });
  for (std::size_t r = 2; r < a.dim() && !found; ++r) {
    enumerate_subspaces(a, r, [&](const Subspace& s) {
      if (decide_mathieu(s, Theta::TwoSided, opts).is_mathieu) found = s;
      return !found.has_value();
    });
  }
  if (!found) fail(ErrorCode::OnlyTrivial, "no subspace other than 0 and A is Mathieu");
  return *found;
}

std::vector<Element> nontrivial_idempotents(const Algebra& a, const ScanOptions& opts) {
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteFieldNoDecision, "idempotent scan needs a finite field");
  const ff::FastAlgebra alg(a);
  const IdempotentIndex index = IdempotentIndex::build(alg, opts);
  std::vector<Element> out;
  for (const auto& e : index.nonzero()) {
    if (e != alg.unit()) out.push_back(a.element(ff::to_vector(e, a.field())));
  }
  return out;
}

namespace {

// A = K e + K f with e + f = 1 and e f = f e = 0.
bool split_pair(const Algebra& a, const std::vector<Element>& ids) {
  if (a.dim() != 2 || ids.size() != 2) return false;
  const Element& e = ids[0];
  const Element& f = ids[1];
  return e + f == a.one() && elem_mul(e, f).is_zero() && elem_mul(f, e).is_zero();
}

}  // namespace

bool is_quasi_stable(const Algebra& a, const ScanOptions& opts) {
  if (!a.field().is_finite()) {
    if (a.dim() == 1) return true;
    fail(ErrorCode::InfiniteFieldNoDecision, "idempotent scan needs a finite field");
  }
  const auto ids = nontrivial_idempotents(a, opts);
  return ids.empty() || split_pair(a, ids);
}

bool is_stable(const Algebra& a, const ScanOptions& opts) {
  if (a.dim() == 1) return true;
  if (a.field().characteristic() != 2 || a.dim() != 2) return false;
  return split_pair(a, nontrivial_idempotents(a, opts));
}

MathieuLattice enumerate_all_mathieu(const Algebra& a, Theta theta, const ScanOptions& opts, std::uint64_t limit) {
  if (!a.field().is_finite()) fail(ErrorCode::InfiniteField, "subspace enumeration needs a finite field");
  std::uint64_t count = 0;
  for (std::size_t r = 0; r <= a.dim(); ++r) {
    const std::uint64_t c = gaussian_binomial(a.field().characteristic(), a.dim(), r);
    count = (c > limit || count + c > limit) ? limit + 1 : count + c;
  }
  if (count > limit) {
    fail(ErrorCode::TooLarge, "'" + a.label() + "' has more than " + std::to_string(limit) + " subspaces");
  }
  MathieuLattice out;
  for (std::size_t r = 0; r <= a.dim(); ++r) {
    enumerate_subspaces(a, r, [&](const Subspace& s) {
      ++out.subspaces_checked;
      if (decide_mathieu(s, theta, opts).is_mathieu) out.all.push_back(s);
      return true;
    });
  }
  for (const auto& s : out.all) {
    if (s.is_zero() || s.is_whole()) continue;
    bool maximal = true;
    for (const auto& t : out.all) {
      if (t.is_whole() || t.dim() <= s.dim()) continue;
      if (t.contains(s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.maximal_nontrivial.push_back(s);
  }
  for (const auto& s : out.all) {
    if (s.is_zero()) continue;
    bool minimal = true;
    for (const auto& t : out.all) {
      if (t.is_zero() || t.dim() >= s.dim()) continue;
      if (s.contains(t)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.minimal_nonzero.push_back(s);
  }
  return out;
}

}  // namespace mk
