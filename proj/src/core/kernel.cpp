#include "kernel.hpp"

#include <unordered_map>

namespace mk::ff {

Word inv_mod(Word a, Word p) {
  if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  std::uint64_t base = a % p, result = 1, e = p - 2;
  while (e) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<Word>(result);
}

std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t d) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (out > (std::uint64_t(1) << 62) / p) return std::nullopt;
    out *= p;
  }
  return out;
}

std::uint64_t encode(const Word* v, std::size_t d, Word p) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < d; ++i) code = code * p + v[i];
  return code;
}

void decode(std::uint64_t code, std::size_t d, Word p, Word* out) {
  for (std::size_t i = d; i > 0; --i) {
    out[i - 1] = static_cast<Word>(code % p);
    code /= p;
  }
}

Vec to_vec(const Vector& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.residue_value());
  return out;
}

Vector to_vector(const Vec& v, FieldSpec field) {
  Vector out;
  out.reserve(v.size());
  for (Word x : v) out.push_back(field.from_int(x));
  return out;
}

// ---------------------------------------------------------------------------

FastAlgebra::FastAlgebra(const Algebra& a) : source_(a), p_(a.field().characteristic()), d_(a.dim()) {
  if (p_ == 0) fail(ErrorCode::InfiniteField, "packed arithmetic needs a finite field");
  lazy_ = p_ < 65536 && d_ <= 64;
  start_.reserve(d_ * d_ + 1);
  start_.push_back(0);
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      for (const auto& t : a.sparse_product(i, j)) {
        idx_.push_back(t.index);
        coef_.push_back(t.coeff.residue_value());
      }
      start_.push_back(static_cast<std::uint32_t>(idx_.size()));
    }
  }
  unit_ = to_vec(a.unit());
}

void FastAlgebra::mul(const Word* a, const Word* b, Word* out) const {
  if (lazy_) {
    std::uint64_t acc[64] = {};
    for (std::size_t i = 0; i < d_; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        if (!b[j]) continue;
        const std::uint64_t ab = std::uint64_t(a[i]) * b[j];
        const std::size_t pair = i * d_ + j;
        for (std::uint32_t t = start_[pair]; t < start_[pair + 1]; ++t) acc[idx_[t]] += ab * coef_[t];
      }
    }
    for (std::size_t k = 0; k < d_; ++k) out[k] = static_cast<Word>(acc[k] % p_);
    return;
  }
  for (std::size_t k = 0; k < d_; ++k) out[k] = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (!b[j]) continue;
      const Word ab = mul_mod(a[i], b[j], p_);
      const std::size_t pair = i * d_ + j;
      for (std::uint32_t t = start_[pair]; t < start_[pair + 1]; ++t) {
        out[idx_[t]] = add_mod(out[idx_[t]], mul_mod(ab, coef_[t], p_), p_);
      }
    }
  }
}

void FastAlgebra::left_basis(std::size_t i, const Word* b, Word* out) const {
  for (std::size_t k = 0; k < d_; ++k) out[k] = 0;
  for (std::size_t j = 0; j < d_; ++j) {
    if (!b[j]) continue;
    const std::size_t pair = i * d_ + j;
    for (std::uint32_t t = start_[pair]; t < start_[pair + 1]; ++t) {
      out[idx_[t]] = add_mod(out[idx_[t]], mul_mod(b[j], coef_[t], p_), p_);
    }
  }
}

void FastAlgebra::right_basis(const Word* a, std::size_t j, Word* out) const {
  for (std::size_t k = 0; k < d_; ++k) out[k] = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    if (!a[i]) continue;
    const std::size_t pair = i * d_ + j;
    for (std::uint32_t t = start_[pair]; t < start_[pair + 1]; ++t) {
      out[idx_[t]] = add_mod(out[idx_[t]], mul_mod(a[i], coef_[t], p_), p_);
    }
  }
}

Vec FastAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(d_);
  mul(a.data(), b.data(), out.data());
  return out;
}

bool FastAlgebra::is_idempotent(const Vec& a) const { return mul(a, a) == a; }

// ---------------------------------------------------------------------------

namespace {

// In-place RREF over F_p; returns pivots and drops zero rows.
std::vector<std::size_t> packed_rref(std::vector<Vec>& rows, std::size_t d, Word p) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    const Word inv = inv_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = mul_mod(x, inv, p);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == rank || rows[o][c] == 0) continue;
      const Word f = rows[o][c];
      for (std::size_t k = 0; k < d; ++k) rows[o][k] = sub_mod(rows[o][k], mul_mod(f, rows[rank][k], p), p);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

FastSubspace::FastSubspace(Word p, std::size_t d, const std::vector<Vec>& generators) : p_(p), d_(d), rows_(generators) {
  pivots_ = packed_rref(rows_, d_, p_);
  std::vector<bool> is_pivot(d_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t free = 0; free < d_; ++free) {
    if (is_pivot[free]) continue;
    // Functional vanishing on the rows: x_free - sum_r rows[r][free] x_{pivot r}.
    Vec f(d_, 0);
    f[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) f[pivots_[r]] = sub_mod(0, rows_[r][free], p_);
    checks_.push_back(std::move(f));
  }
}

FastSubspace FastSubspace::from_annihilator(Word p, std::size_t d, const std::vector<Vec>& functionals) {
  std::vector<Vec> rows = functionals;
  const auto pivots = packed_rref(rows, d, p);
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> kernel;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec v(d, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = sub_mod(0, rows[r][free], p);
    kernel.push_back(std::move(v));
  }
  return FastSubspace(p, d, kernel);
}

bool FastSubspace::contains(const Word* v) const {
  if (!bitmap_.empty()) return contains_code(encode(v, d_, p_));
  for (const auto& f : checks_) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < d_; ++k) {
      if (f[k] && v[k]) acc = (acc + std::uint64_t(f[k]) * v[k]) % p_;
    }
    if (acc) return false;
  }
  return true;
}

bool FastSubspace::build_bitmap(std::uint64_t max_codes) {
  auto total = checked_power(p_, d_);
  if (!total || *total > max_codes) return false;
  std::vector<std::uint64_t> bits((*total + 63) / 64, 0);
  for_each_vector([&](const Vec& v) {
    const std::uint64_t code = encode(v.data(), d_, p_);
    bits[code >> 6] |= std::uint64_t(1) << (code & 63);
    return true;
  });
  bitmap_ = std::move(bits);
  return true;
}

// ---------------------------------------------------------------------------

FastCycle fast_power_cycle(const FastAlgebra& alg, const Vec& a, std::uint64_t max_steps) {
  const std::size_t d = alg.dim();
  const Word p = alg.p();
  FastCycle out{0, 0, {}};
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  Vec power = a;
  const bool small = checked_power(p, d).has_value();
  for (std::uint64_t m = 1; m <= max_steps; ++m) {
    std::uint64_t prior = 0;
    if (small) {
      auto [it, inserted] = seen.emplace(encode(power.data(), d, p), m);
      if (!inserted) prior = it->second;
    } else {
      for (std::size_t i = 0; i < out.powers.size(); ++i) {
        if (out.powers[i] == power) {
          prior = i + 1;
          break;
        }
      }
    }
    if (prior) {
      out.preperiod = prior;
      out.period = m - prior;
      return out;
    }
    out.powers.push_back(power);
    power = alg.mul(power, a);
  }
  fail(ErrorCode::TooLarge, "power sequence did not repeat within " + std::to_string(max_steps) + " steps");
}

FastMinPoly fast_minimal_polynomial(const FastAlgebra& alg, const Vec& a) {
  const std::size_t d = alg.dim();
  const Word p = alg.p();
  std::vector<Vec> rows, combs;
  std::vector<std::size_t> pivots;
  Vec power = alg.unit();
  for (std::size_t m = 0; m <= d; ++m) {
    Vec v = power;
    Vec comb(d + 1, 0);
    comb[m] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Word f = v[pivots[r]];
      if (!f) continue;
      for (std::size_t k = 0; k < d; ++k) v[k] = sub_mod(v[k], mul_mod(f, rows[r][k], p), p);
      for (std::size_t k = 0; k <= d; ++k) comb[k] = sub_mod(comb[k], mul_mod(f, combs[r][k], p), p);
    }
    std::size_t pivot = 0;
    while (pivot < d && v[pivot] == 0) ++pivot;
    if (pivot == d) {
      comb.resize(m + 1);
      std::size_t k = 0;
      while (comb[k] == 0) ++k;
      return {k, m - k, std::move(comb)};
    }
    const Word inv = inv_mod(v[pivot], p);
    for (auto& x : v) x = mul_mod(x, inv, p);
    for (auto& x : comb) x = mul_mod(x, inv, p);
    rows.push_back(std::move(v));
    combs.push_back(std::move(comb));
    pivots.push_back(pivot);
    power = alg.mul(power, a);
  }
  fail(ErrorCode::Internal, "no linear dependence among the first dim+1 powers");
}

}  // namespace mk::ff
