#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace mk {

// ---------------------------------------------------------------------------
// Catalog

namespace {

FieldSpec fp(std::uint32_t p) { return FieldSpec::prime(p); }

// Scan guard for tag verification.
constexpr std::uint64_t kTagScan = 100'000;

std::optional<bool> scan_all(const Algebra& a, const std::function<bool(const ff::FastAlgebra&, const ff::Vec&)>& pred) {
  auto total = ff::checked_power(a.field().characteristic(), a.dim());
  if (!total || *total > kTagScan) return std::nullopt;
  const ff::FastAlgebra alg(a);
  bool all = ff::for_each_ambient(alg.p(), alg.dim(), [&](const ff::Vec& x) { return pred(alg, x); });
  return all;
}

bool nonzero(const ff::Vec& x) {
  return std::any_of(x.begin(), x.end(), [](ff::Word w) { return w != 0; });
}

}  // namespace

std::vector<std::string> computed_tags(const Algebra& a, bool direct_sum, bool known_simple) {
  std::vector<std::string> tags;
  const bool commutative = a.is_commutative();
  if (commutative) tags.push_back("commutative");
  if (direct_sum) tags.push_back("direct_sum");

  // Local: no idempotent besides 0 and 1. A nontrivial basis idempotent
  // settles it without a scan.
  std::optional<bool> local;
  for (std::size_t i = 0; i < a.dim() && !local; ++i) {
    const Element e = a.basis(i);
    if (is_idempotent(e) && e != a.one()) local = false;
  }
  if (!local) {
    local = scan_all(a, [](const ff::FastAlgebra& alg, const ff::Vec& x) {
      return !nonzero(x) || x == alg.unit() || !alg.is_idempotent(x);
    });
  }
  if (!local) fail(ErrorCode::TooLarge, "cannot verify the local tag of '" + a.label() + "'");

  bool field_ext = false;
  if (commutative && *local) {
    auto inv = scan_all(a, [](const ff::FastAlgebra& alg, const ff::Vec& x) {
      return !nonzero(x) || ff::fast_minimal_polynomial(alg, x).k == 0;
    });
    if (!inv) fail(ErrorCode::TooLarge, "cannot verify the field_extension tag of '" + a.label() + "'");
    field_ext = *inv;
  }
  if (field_ext) tags.push_back("field_extension");
  if (*local) tags.push_back("local");
  if (a.matrix_order() && *a.matrix_order() >= 2) tags.push_back("matrix");

  bool simple = known_simple;
  if (!known_simple) {
    auto s = scan_all(a, [&](const ff::FastAlgebra&, const ff::Vec& x) {
      return !nonzero(x) || theta_ideal(a.element(ff::to_vector(x, a.field())), Theta::TwoSided).is_whole();
    });
    simple = s.value_or(false);
  }
  if (simple) tags.push_back("simple");
  std::sort(tags.begin(), tags.end());
  return tags;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    struct Spec {
      std::string name;
      Algebra algebra;
      std::vector<std::string> tags;
      std::string provenance;
      bool direct_sum = false;
      bool known_simple = false;
    };
    const Algebra f2 = field_algebra(fp(2)), f3 = field_algebra(fp(3)), f5 = field_algebra(fp(5));
    const std::vector<std::string> field_tags{"commutative", "field_extension", "local", "simple"};
    std::vector<Spec> specs;
    specs.push_back({"F2", f2, field_tags, "prime field"});
    specs.push_back({"F3", f3, field_tags, "prime field"});
    specs.push_back({"F5", f5, field_tags, "prime field"});
    specs.push_back({"F4/F2", from_poly_quotient(Poly::from_ints(fp(2), {1, 1, 1})).relabeled("F4/F2"), field_tags,
                     "F2[t]/(t^2+t+1)"});
    specs.push_back({"F2+F2", direct_sum(f2, f2).relabeled("F2+F2"), {"commutative", "direct_sum"}, "direct sum", true});
    specs.push_back({"F3+F3", direct_sum(f3, f3).relabeled("F3+F3"), {"commutative", "direct_sum"}, "direct sum", true});
    specs.push_back({"F2[t]/(t^2)", from_poly_quotient(Poly::from_ints(fp(2), {0, 0, 1})).relabeled("F2[t]/(t^2)"),
                     {"commutative", "local"}, "polynomial quotient"});
    specs.push_back({"F2[t]/(t^3)", from_poly_quotient(Poly::from_ints(fp(2), {0, 0, 0, 1})).relabeled("F2[t]/(t^3)"),
                     {"commutative", "local"}, "polynomial quotient"});
    specs.push_back({"F3[t]/(t^2-t)", from_poly_quotient(Poly::from_ints(fp(3), {0, -1, 1})).relabeled("F3[t]/(t^2-t)"),
                     {"commutative"}, "polynomial quotient"});
    specs.push_back({"F3[t]/(t^2+1)", from_poly_quotient(Poly::from_ints(fp(3), {1, 0, 1})).relabeled("F3[t]/(t^2+1)"),
                     field_tags, "polynomial quotient"});
    for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {3, 5}}) {
      const std::string name = "M" + std::to_string(n) + "(F" + std::to_string(q) + ")";
      specs.push_back({name, from_matrix_algebra(n, fp(q)).relabeled(name), {"matrix", "simple"}, "matrix units", false, true});
    }
    specs.push_back({"opp(M2(F2))", opposite(from_matrix_algebra(2, fp(2))).relabeled("opp(M2(F2))"), {"simple"},
                     "opposite of matrix units", false, true});

    std::vector<CatalogEntry> out;
    for (auto& s : specs) {
      std::sort(s.tags.begin(), s.tags.end());
      const auto tags = computed_tags(s.algebra, s.direct_sum, s.known_simple);
      if (tags != s.tags) fail(ErrorCode::Internal, "catalog tags of '" + s.name + "' do not verify");
      out.push_back({s.name, s.algebra, s.tags, s.provenance});
    }
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  fail(ErrorCode::InvalidArgument, "no catalog algebra named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Suite plumbing

namespace {

struct Outcome {
  bool pass = true;
  std::optional<std::string> witness;
};

Outcome ok() { return {}; }
Outcome bad(std::string why) { return {false, std::move(why)}; }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view tag) : gen_(seed ^ fnv1a(tag)) {}
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& opts) : suite_(std::move(suite)), opts_(opts) {}

  void check(const std::string& check, const std::string& instance, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const Error& e) {
      o = bad(e.what());
    }
    CheckResult r;
    r.suite = suite_;
    r.check = check;
    r.instance = instance;
    r.pass = o.pass;
    r.witness = std::move(o.witness);
    r.seed = opts_.seed;
    if (opts_.timing) {
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() {
    std::stable_sort(results_.begin(), results_.end(), [](const CheckResult& a, const CheckResult& b) {
      return std::tie(a.check, a.instance) < std::tie(b.check, b.instance);
    });
    return std::move(results_);
  }

  const SuiteOptions& opts() const { return opts_; }

 private:
  std::string suite_;
  SuiteOptions opts_;
  std::vector<CheckResult> results_;
};

std::string show(const Subspace& v) { return v.to_string(); }
std::string show(const Algebra& a, const ff::Vec& x) { return Element(a, ff::to_vector(x, a.field())).to_string(); }

std::uint64_t element_count(const Algebra& a) {
  auto n = ff::checked_power(a.field().characteristic(), a.dim());
  return n ? *n : UINT64_MAX;
}

std::uint64_t subspace_total(const Algebra& a) {
  std::uint64_t total = 0;
  for (std::size_t r = 0; r <= a.dim(); ++r) {
    const std::uint64_t c = gaussian_binomial(a.field().characteristic(), a.dim(), r);
    if (c == UINT64_MAX || total + c < total) return UINT64_MAX;
    total += c;
  }
  return total;
}

std::vector<Subspace> every_subspace(const Algebra& a, std::size_t max_dim) {
  std::vector<Subspace> out;
  for (std::size_t r = 0; r <= std::min(max_dim, a.dim()); ++r) {
    auto part = all_subspaces(a, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Subspace random_subspace(const Algebra& a, Rng& rng) {
  const std::size_t d = a.dim();
  const std::size_t r = static_cast<std::size_t>(rng.below(d + 1));
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < r; ++i) {
    Vector v;
    for (std::size_t k = 0; k < d; ++k) v.push_back(a.field().from_int(static_cast<std::int64_t>(rng.below(a.field().characteristic()))));
    gens.push_back(std::move(v));
  }
  return Subspace::span(a, std::move(gens));
}

// All subspaces when there are few, otherwise `count` seeded random ones.
std::vector<Subspace> sample_subspaces(const Algebra& a, Rng& rng, std::uint64_t max_all, std::size_t count) {
  if (subspace_total(a) <= max_all) return every_subspace(a, a.dim());
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_subspace(a, rng));
  return out;
}

bool over_f2_f3(const CatalogEntry& e) {
  const auto p = e.algebra.field().characteristic();
  return p == 2 || p == 3;
}

bool small(const CatalogEntry& e, std::uint64_t limit) { return element_count(e.algebra) <= limit; }

// Per-element power data shared by the radical checks.
class PowerTable {
 public:
  PowerTable(const Algebra& a, std::uint64_t max_steps) : alg_(a) {
    const std::uint64_t total = element_count(a);
    entries_.reserve(total);
    ff::Vec x(a.dim());
    for (std::uint64_t code = 0; code < total; ++code) {
      ff::decode(code, a.dim(), alg_.p(), x.data());
      const ff::FastMinPoly mp = ff::fast_minimal_polynomial(alg_, x);
      entries_.push_back({mp.k, mp.h_degree, ff::fast_power_cycle(alg_, x, max_steps)});
    }
  }

  std::uint64_t size() const { return entries_.size(); }
  const ff::FastAlgebra& alg() const { return alg_; }

  bool window(std::uint64_t code, const ff::FastSubspace& v) const {
    const Entry& e = entries_[code];
    if (e.h_degree == 0) return true;
    const std::uint64_t start = std::max<std::uint64_t>(e.k, 1);
    for (std::uint64_t m = start; m < start + e.h_degree; ++m) {
      if (!v.contains(e.cycle.power(m))) return false;
    }
    return true;
  }

  // a^m in S for every m in the periodic tail.
  template <typename In>
  bool tail_in(std::uint64_t code, In&& in) const {
    const Entry& e = entries_[code];
    for (std::uint64_t m = e.cycle.preperiod; m < e.cycle.preperiod + e.cycle.period; ++m) {
      if (!in(e.cycle.power(m))) return false;
    }
    return true;
  }

  std::vector<char> radical(const ff::FastSubspace& v) const {
    std::vector<char> out(entries_.size());
    for (std::uint64_t c = 0; c < entries_.size(); ++c) out[c] = window(c, v);
    return out;
  }

  bool nilpotent(std::uint64_t code) const { return entries_[code].k > 0 && entries_[code].h_degree == 0; }
  bool invertible(std::uint64_t code) const { return entries_[code].k == 0; }

 private:
  struct Entry {
    std::uint64_t k;
    std::uint64_t h_degree;
    ff::FastCycle cycle;
  };
  ff::FastAlgebra alg_;
  std::vector<Entry> entries_;
};

ff::FastSubspace fast_with_bitmap(const Subspace& v) {
  ff::FastSubspace f = v.fast();
  f.build_bitmap(std::uint64_t(1) << 24);
  return f;
}

bool any_theta_mathieu(const Subspace& v, const ScanOptions& scan) {
  for (Theta t : kAllThetas) {
    if (decide_mathieu(v, t, scan).is_mathieu) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// radical_laws

void suite_radical_laws(Recorder& rec) {
  const auto& opts = rec.opts();
  for (const auto& entry : catalog()) {
    if (!over_f2_f3(entry)) continue;
    const Algebra& a = entry.algebra;

    rec.check("window_vs_cycle", entry.name, [&]() -> Outcome {
      Rng rng(opts.seed, "window_vs_cycle/" + entry.name);
      std::vector<Subspace> spaces;
      if (a.dim() <= 3) spaces = every_subspace(a, a.dim());
      for (int i = 0; i < 200; ++i) spaces.push_back(random_subspace(a, rng));
      const PowerTable table(a, opts.scan.max_scan);
      for (const auto& v : spaces) {
        const ff::FastSubspace fv = fast_with_bitmap(v);
        for (std::uint64_t c = 0; c < table.size(); ++c) {
          const bool w = table.window(c, fv);
          const bool t = table.tail_in(c, [&](const ff::Vec& x) { return fv.contains(x); });
          if (w != t) {
            ff::Vec x(a.dim());
            ff::decode(c, a.dim(), table.alg().p(), x.data());
            return bad("V = " + show(v) + ", a = " + show(a, x));
          }
        }
      }
      return ok();
    });

    if (!small(entry, 729)) continue;

    rec.check("rad_of_radical", entry.name, [&]() -> Outcome {
      Rng rng(opts.seed, "rad_of_radical/" + entry.name);
      const PowerTable table(a, opts.scan.max_scan);
      for (const auto& v : sample_subspaces(a, rng, 300, 60)) {
        if (!any_theta_mathieu(v, opts.scan)) continue;
        const ff::FastSubspace fv = fast_with_bitmap(v);
        const auto rad = table.radical(fv);
        for (std::uint64_t c = 0; c < table.size(); ++c) {
          const bool twice = table.tail_in(c, [&](const ff::Vec& x) { return rad[ff::encode(x.data(), a.dim(), table.alg().p())] != 0; });
          if (twice != (rad[c] != 0)) return bad("M = " + show(v) + ", element code " + std::to_string(c));
        }
      }
      return ok();
    });

    rec.check("radical_of_max_ideal", entry.name, [&]() -> Outcome {
      Rng rng(opts.seed, "radical_of_max_ideal/" + entry.name);
      const PowerTable table(a, opts.scan.max_scan);
      for (const auto& v : sample_subspaces(a, rng, 300, 60)) {
        if (!decide_mathieu(v, Theta::TwoSided, opts.scan).is_mathieu) continue;
        const Subspace ideal = max_theta_ideal(v, Theta::TwoSided);
        if (table.radical(fast_with_bitmap(v)) != table.radical(fast_with_bitmap(ideal))) {
          return bad("M = " + show(v) + ", I_M = " + show(ideal));
        }
      }
      return ok();
    });

    rec.check("idempotent_dichotomy", entry.name, [&]() -> Outcome {
      Rng rng(opts.seed, "idempotent_dichotomy/" + entry.name);
      const PowerTable table(a, opts.scan.max_scan);
      const ff::FastAlgebra& alg = table.alg();
      for (const auto& v : sample_subspaces(a, rng, 300, 60)) {
        const ff::FastSubspace fv = fast_with_bitmap(v);
        bool nontrivial = false;
        fv.for_each_vector([&](const ff::Vec& x) {
          nontrivial = nonzero(x) && x != alg.unit() && alg.is_idempotent(x);
          return !nontrivial;
        });
        bool dichotomy = true;
        for (std::uint64_t c = 0; c < table.size() && dichotomy; ++c) {
          if (table.window(c, fv)) dichotomy = table.nilpotent(c) || table.invertible(c);
        }
        if (nontrivial == dichotomy) return bad("V = " + show(v));
      }
      return ok();
    });
  }
}

// ---------------------------------------------------------------------------
// idempotent_criterion

Outcome p_of_a_checks(const Element& a) {
  const PofA r = build_p_of_a(a);
  const MinPolyData mp = minimal_polynomial(a);
  const FieldSpec f = a.field();
  const Poly tk = Poly::monomial(f.one(), r.k);
  if (tk * r.u + mp.h * r.v != Poly::constant(f.one())) return bad("Bezout identity fails for " + a.to_string());
  for (std::size_t i = 0; i < r.k; ++i) {
    if (!r.p.coefficient(i).is_zero()) return bad("p not divisible by t^k for " + a.to_string());
  }
  if (!(r.p * r.p - r.p).divmod(mp.minpoly).second.is_zero()) return bad("p^2 != p mod f for " + a.to_string());
  if (!(tk - tk * r.p).divmod(mp.minpoly).second.is_zero()) return bad("t^k != t^k p mod f for " + a.to_string());
  const Poly red = r.p % mp.minpoly;
  if (red.is_zero() || red == Poly::constant(f.one())) return bad("p = 0 or 1 mod f for " + a.to_string());
  const Element& e = r.value;
  if (elem_mul(e, e) != e) return bad("p(a) not idempotent for " + a.to_string());
  if (e.is_zero() || e == a.algebra().one()) return bad("p(a) trivial for " + a.to_string());
  const Element ak = elem_power(a, r.k);
  if (elem_mul(ak, e) != ak) return bad("a^k != a^k p(a) for " + a.to_string());
  std::vector<Element> powers;
  Element pw = a;
  for (std::size_t m = 1; m <= a.algebra().dim(); ++m) {
    powers.push_back(pw);
    pw = elem_mul(pw, a);
  }
  if (!Subspace::span(a.algebra(), powers).contains(e)) return bad("p(a) outside span of powers for " + a.to_string());
  return ok();
}

void suite_idempotent_criterion(Recorder& rec) {
  const auto& opts = rec.opts();

  const std::vector<std::string> exhaustive{"F2+F2", "F2[t]/(t^2)", "F2[t]/(t^3)", "F4/F2"};
  for (const auto& name : exhaustive) {
    rec.check("oracle_equivalence", name, [&]() -> Outcome {
      for (const auto& v : every_subspace(catalog_entry(name).algebra, 64)) {
        for (Theta t : kAllThetas) {
          if (decide_mathieu(v, t, opts.scan).is_mathieu != oracle_mathieu(v, t, opts.scan)) {
            return bad(std::string(theta_name(t)) + ": " + show(v));
          }
        }
      }
      return ok();
    });
  }
  rec.check("oracle_equivalence", "M2(F2) dim<=2", [&]() -> Outcome {
    for (const auto& v : every_subspace(catalog_entry("M2(F2)").algebra, 2)) {
      for (Theta t : kAllThetas) {
        if (decide_mathieu(v, t, opts.scan).is_mathieu != oracle_mathieu(v, t, opts.scan)) {
          return bad(std::string(theta_name(t)) + ": " + show(v));
        }
      }
    }
    return ok();
  });
  for (const auto& entry : catalog()) {
    if (!over_f2_f3(entry) || !small(entry, 20'000)) continue;
    if (std::find(exhaustive.begin(), exhaustive.end(), entry.name) != exhaustive.end()) continue;
    rec.check("oracle_equivalence", entry.name + " sampled", [&]() -> Outcome {
      Rng rng(opts.seed, "oracle_equivalence/" + entry.name);
      for (const auto& v : sample_subspaces(entry.algebra, rng, 300, 6)) {
        for (Theta t : kAllThetas) {
          if (decide_mathieu(v, t, opts.scan).is_mathieu != oracle_mathieu(v, t, opts.scan)) {
            return bad(std::string(theta_name(t)) + ": " + show(v));
          }
        }
      }
      return ok();
    });
  }

  for (const auto& entry : catalog()) {
    if (!small(entry, 729)) continue;
    rec.check("witness_replay", entry.name, [&]() -> Outcome {
      Rng rng(opts.seed, "witness_replay/" + entry.name);
      for (const auto& v : sample_subspaces(entry.algebra, rng, 300, 60)) {
        for (Theta t : kAllThetas) {
          const MathieuVerdict verdict = decide_mathieu(v, t, opts.scan);
          if (!verdict.is_mathieu && !verify_witness(v, t, *verdict.witness)) {
            return bad(std::string(theta_name(t)) + ": " + show(v));
          }
        }
      }
      return ok();
    });

    rec.check("line_rule", entry.name, [&]() -> Outcome {
      for (const auto& line : all_subspaces(entry.algebra, 1)) {
        const Element a = entry.algebra.element(line.basis()[0]);
        for (Theta t : kAllThetas) {
          if (line_is_mathieu(a, t) != decide_mathieu(line, t, opts.scan).is_mathieu) {
            return bad(std::string(theta_name(t)) + ": " + show(line));
          }
        }
      }
      return ok();
    });

    if (!entry.algebra.is_commutative()) continue;
    rec.check("commutative_radical", entry.name, [&]() -> Outcome {
      Rng rng(opts.seed, "commutative_radical/" + entry.name);
      for (const auto& v : sample_subspaces(entry.algebra, rng, 300, 60)) {
        const bool by_radical = is_mathieu_commutative(v, opts.scan);
        for (Theta t : kAllThetas) {
          if (decide_mathieu(v, t, opts.scan).is_mathieu != by_radical) return bad(std::string(theta_name(t)) + ": " + show(v));
        }
      }
      return ok();
    });
  }

  for (const std::string name : {"M2(F3)", "M2(F5)", "F2[t]/(t^3)"}) {
    rec.check("p_of_a", name, [&]() -> Outcome {
      const Algebra& a = catalog_entry(name).algebra;
      const ff::FastAlgebra alg(a);
      Outcome out;
      ff::for_each_ambient(alg.p(), alg.dim(), [&](const ff::Vec& x) {
        const ff::FastMinPoly mp = ff::fast_minimal_polynomial(alg, x);
        if (mp.k == 0 || mp.h_degree == 0) return true;
        out = p_of_a_checks(a.element(ff::to_vector(x, a.field())));
        return out.pass;
      });
      return out;
    });
  }
  rec.check("p_of_a", "M3(Q) random", [&]() -> Outcome {
    Rng rng(opts.seed, "p_of_a/M3(Q)");
    const Algebra a = from_matrix_algebra(3, FieldSpec::rationals());
    int accepted = 0;
    for (int attempt = 0; attempt < 100'000 && accepted < 100; ++attempt) {
      Vector v;
      for (int i = 0; i < 9; ++i) v.push_back(FieldSpec::rationals().from_int(static_cast<std::int64_t>(rng.below(5)) - 2));
      const Element x = a.element(std::move(v));
      const MinPolyData mp = minimal_polynomial(x);
      if (mp.k == 0 || mp.h.degree() == 0) continue;
      ++accepted;
      Outcome o = p_of_a_checks(x);
      if (!o.pass) return o;
    }
    if (accepted < 100) return bad("only " + std::to_string(accepted) + " qualifying samples");
    return ok();
  });
}

// ---------------------------------------------------------------------------
// closure_laws

std::vector<Subspace> mathieu_among(const std::vector<Subspace>& spaces, Theta t, const ScanOptions& scan) {
  std::vector<Subspace> out;
  for (const auto& v : spaces) {
    if (decide_mathieu(v, t, scan).is_mathieu) out.push_back(v);
  }
  return out;
}

std::vector<Subspace> two_sided_ideals(const Algebra& a) {
  std::vector<Subspace> out;
  for (const auto& v : every_subspace(a, a.dim())) {
    if (!v.is_zero() && !v.is_whole() && is_theta_ideal(v, Theta::TwoSided)) out.push_back(v);
  }
  return out;
}

Matrix transpose_matrix(std::size_t n, FieldSpec f) {
  const std::size_t d = n * n;
  Matrix m(d, zero_vector(f, d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[matrix_unit_index(n, j, i)][matrix_unit_index(n, i, j)] = f.one();
  }
  return m;
}

void suite_closure_laws(Recorder& rec) {
  const auto& opts = rec.opts();
  std::vector<const CatalogEntry*> smalls;
  for (const auto& e : catalog()) {
    if (small(e, 729)) smalls.push_back(&e);
  }

  for (const auto* entry : smalls) {
    const Algebra& a = entry->algebra;
    rec.check("contains_one", entry->name, [&]() -> Outcome {
      Rng rng(opts.seed, "contains_one/" + entry->name);
      for (const auto& v : sample_subspaces(a, rng, 300, 60)) {
        const Subspace w = sum(v, Subspace::span(a, std::vector<Element>{a.one()}));
        if (w.is_whole()) continue;
        for (Theta t : kAllThetas) {
          const MathieuVerdict verdict = decide_mathieu(w, t, opts.scan);
          if (verdict.is_mathieu || !verify_witness(w, t, *verdict.witness)) return bad(std::string(theta_name(t)) + ": " + show(w));
        }
      }
      return ok();
    });

    rec.check("intersection", entry->name, [&]() -> Outcome {
      Rng rng(opts.seed, "intersection/" + entry->name);
      const auto spaces = sample_subspaces(a, rng, 300, 60);
      for (Theta t : kAllThetas) {
        auto ms = mathieu_among(spaces, t, opts.scan);
        if (ms.size() > 30) ms.erase(ms.begin() + 30, ms.end());
        for (std::size_t i = 0; i < ms.size(); ++i) {
          for (std::size_t j = i + 1; j < ms.size(); ++j) {
            const Subspace both = intersect(ms[i], ms[j]);
            if (!decide_mathieu(both, t, opts.scan).is_mathieu) {
              return bad(std::string(theta_name(t)) + ": " + show(ms[i]) + " and " + show(ms[j]));
            }
          }
        }
      }
      return ok();
    });

    rec.check("duality", entry->name, [&]() -> Outcome {
      Rng rng(opts.seed, "duality/" + entry->name);
      const Algebra op = opposite(a);
      for (const auto& v : sample_subspaces(a, rng, 300, 60)) {
        const Subspace w = Subspace::span(op, v.basis());
        const auto d = [&](const Subspace& s, Theta t) { return decide_mathieu(s, t, opts.scan).is_mathieu; };
        if (d(v, Theta::Left) != d(w, Theta::Right) || d(v, Theta::Right) != d(w, Theta::Left) ||
            d(v, Theta::TwoSided) != d(w, Theta::TwoSided) || d(v, Theta::PreTwoSided) != d(w, Theta::PreTwoSided)) {
          return bad(show(v));
        }
      }
      return ok();
    });

    if (subspace_total(a) > 300) continue;
    for (const auto& ideal : two_sided_ideals(a)) {
      rec.check("quotient", entry->name + " / " + show(ideal), [&]() -> Outcome {
        const Quotient q = quotient_algebra(ideal);
        for (const auto& m : every_subspace(a, a.dim())) {
          if (!m.contains(ideal)) continue;
          const Subspace image_m = image(q.projection, m);
          for (Theta t : kAllThetas) {
            if (decide_mathieu(m, t, opts.scan).is_mathieu != decide_mathieu(image_m, t, opts.scan).is_mathieu) {
              return bad(std::string(theta_name(t)) + ": " + show(m));
            }
          }
        }
        return ok();
      });
    }
  }

  // Unital homomorphisms: scalar inclusions, projections, transposes, quotient maps.
  std::vector<std::pair<std::string, AlgebraMap>> maps;
  for (const auto* entry : smalls) {
    const Algebra& a = entry->algebra;
    if (a.dim() == 1) continue;
    const Algebra k = field_algebra(a.field());
    Matrix m;
    for (const auto& u : a.unit()) m.push_back(Vector{u});
    maps.emplace_back("K -> " + entry->name, AlgebraMap::make(k, a, std::move(m)));
  }
  for (const std::string name : {"F2+F2", "F3+F3"}) {
    const Algebra& a = catalog_entry(name).algebra;
    const Algebra k = field_algebra(a.field());
    const FieldSpec f = a.field();
    maps.emplace_back(name + " -> first", AlgebraMap::make(a, k, Matrix{Vector{f.one(), f.zero()}}));
    maps.emplace_back(name + " -> second", AlgebraMap::make(a, k, Matrix{Vector{f.zero(), f.one()}}));
  }
  for (const std::string name : {"M2(F2)", "M2(F3)"}) {
    const Algebra& a = catalog_entry(name).algebra;
    maps.emplace_back(name + " -> opp by transpose", AlgebraMap::make(a, opposite(a), transpose_matrix(2, a.field())));
  }
  for (const std::string name : {"F2[t]/(t^3)", "F3[t]/(t^2-t)", "F2+F2"}) {
    const Algebra& a = catalog_entry(name).algebra;
    for (const auto& ideal : two_sided_ideals(a)) {
      maps.emplace_back(name + " -> quotient by " + show(ideal), quotient_algebra(ideal).projection);
    }
  }
  for (const auto& [label, phi] : maps) {
    rec.check("pull_back", label, [&, &phi = phi]() -> Outcome {
      Rng rng(opts.seed, "pull_back/" + label);
      for (const auto& m : sample_subspaces(phi.codomain(), rng, 300, 40)) {
        for (Theta t : kAllThetas) {
          if (!decide_mathieu(m, t, opts.scan).is_mathieu) continue;
          const Subspace back = preimage(phi, m);
          if (!decide_mathieu(back, t, opts.scan).is_mathieu) return bad(std::string(theta_name(t)) + ": " + show(m));
        }
      }
      return ok();
    });
  }
}

// ---------------------------------------------------------------------------
// codim1

Scalar trace_of_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Scalar acc = a[0][0].field().zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) acc += a[i][k] * b[k][i];
  }
  return acc;
}

Outcome witness_checks(const Element& x) {
  const IdempotentWitnesses w = witness_idempotents(x);
  const Algebra& alg = x.algebra();
  const Matrix xs = to_square(x);
  for (const auto& [e, left] : {std::pair{w.a, true}, std::pair{w.b, false}}) {
    if (elem_mul(e, e) != e) return bad("not idempotent for X = " + x.to_string());
    if (e.is_zero() || e == alg.one()) return bad("trivial idempotent for X = " + x.to_string());
    const Element prod = left ? elem_mul(e, x) : elem_mul(x, e);
    if (prod.is_zero()) return bad("zero product for X = " + x.to_string());
    const Scalar tr = left ? trace_of_product(to_square(e), xs) : trace_of_product(xs, to_square(e));
    if (!tr.is_zero()) return bad("nonzero trace for X = " + x.to_string());
  }
  return ok();
}

void suite_codim1(Recorder& rec) {
  const auto& opts = rec.opts();
  const std::vector<std::pair<std::size_t, std::uint32_t>> pairs{{1, 3}, {2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {3, 5}};
  for (auto [n, q] : pairs) {
    const std::string inst = "M" + std::to_string(n) + "(F" + std::to_string(q) + ")";
    rec.check("counts", inst, [&, n = n, q = q]() -> Outcome {
      const Codim1Report r = classify_codim1(n, q, opts.scan);
      const std::uint64_t expected = q > n ? 1 : 0;
      for (std::size_t t = 0; t < 4; ++t) {
        if (r.per_theta[t] != expected) {
          return bad(std::string(theta_name(kAllThetas[t])) + ": " + std::to_string(r.per_theta[t]) + " classes");
        }
      }
      if (r.representatives.size() != expected) return bad(std::to_string(r.representatives.size()) + " representatives");
      if (expected == 1 && !is_scalar_class(r.representatives[0])) return bad("surviving class " + r.representatives[0].to_string());
      const std::uint64_t classes = (*ff::checked_power(q, n * n) - 1) / (q - 1);
      if (r.total != classes) return bad("class total " + std::to_string(r.total));
      return ok();
    });
  }

  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (std::size_t n : {2u, 3u}) {
      const std::string inst = "M" + std::to_string(n) + "(F" + std::to_string(q) + ")";
      const Algebra a = from_matrix_algebra(n, FieldSpec::prime(q));
      auto xs = [&, n = n, q = q, inst = inst]() {
        std::vector<Element> out;
        if (n == 2) {
          ff::for_each_ambient(q, 4, [&](const ff::Vec& x) {
            if (nonzero(x)) out.push_back(a.element(ff::to_vector(x, a.field())));
            return true;
          });
        } else {
          Rng rng(rec.opts().seed, "codim1/" + inst);
          while (out.size() < 200) {
            ff::Vec x(9);
            for (auto& w : x) w = static_cast<ff::Word>(rng.below(q));
            if (nonzero(x)) out.push_back(a.element(ff::to_vector(x, a.field())));
          }
        }
        return out;
      };
      rec.check("witness_idempotents", inst, [&]() -> Outcome {
        for (const auto& x : xs()) {
          if (is_scalar_class(x)) {
            try {
              witness_idempotents(x);
              return bad("scalar X accepted: " + x.to_string());
            } catch (const Error& e) {
              if (e.code() != ErrorCode::ScalarDual) throw;
            }
            continue;
          }
          Outcome o = witness_checks(x);
          if (!o.pass) return o;
        }
        return ok();
      });
      rec.check("trace_dual_roundtrip", inst, [&]() -> Outcome {
        for (const auto& x : xs()) {
          const Subspace h = h_subspace(x);
          if (h.codim() != 1) return bad("codimension of H_X for X = " + x.to_string());
          for (const auto& row : h.basis()) {
            if (!trace_of_product(to_square(a.element(row)), to_square(x)).is_zero()) return bad("Tr(AX) != 0 on H_X");
          }
          if (trace_dual(h).x != canonical_scale(x)) return bad("round trip for X = " + x.to_string());
        }
        return ok();
      });
    }
  }

  for (const std::string name : {"M2(F2)", "M2(F3)"}) {
    rec.check("proper_criterion", name, [&]() -> Outcome {
      for (const auto& v : every_subspace(catalog_entry(name).algebra, 3)) check_proper_subspace_criterion(v, opts.scan);
      return ok();
    });
  }
}

// ---------------------------------------------------------------------------
// lines

void suite_lines(Recorder& rec) {
  const auto& opts = rec.opts();
  for (auto [n, q, oracle] : std::vector<std::tuple<std::size_t, std::uint32_t, bool>>{{2, 2, true}, {2, 3, true}, {3, 2, false}}) {
    const std::string inst = "M" + std::to_string(n) + "(F" + std::to_string(q) + ")";
    rec.check("classify", inst, [&, n = n, q = q, oracle = oracle]() -> Outcome {
      const LinesReport r = classify_lines(n, q, oracle, opts.scan);
      const std::string counts = "total " + std::to_string(r.total) + ", quasi-idempotent " + std::to_string(r.quasi_idempotent);
      if (r.total != gaussian_binomial(q, n * n, 1)) return bad("line count mismatch: " + counts);
      if (!r.consistent) return bad("Mathieu count != total - quasi-idempotent: " + counts);
      if (oracle && !r.oracle_agrees) return bad("line rule disagrees with oracle: " + counts);
      return ok();
    });
  }
}

// ---------------------------------------------------------------------------
// quasi_stable / stable

// For each theta: every subspace without 1 satisfies pred.
std::array<bool, 4> all_without_one(const Algebra& a, const std::function<bool(const Subspace&, Theta)>& pred) {
  std::array<bool, 4> out{true, true, true, true};
  for (const auto& v : every_subspace(a, a.dim())) {
    if (v.contains(a.one())) continue;
    for (std::size_t t = 0; t < 4; ++t) {
      if (out[t] && !pred(v, kAllThetas[t])) out[t] = false;
    }
  }
  return out;
}

void suite_quasi_stable(Recorder& rec) {
  const auto& opts = rec.opts();
  const std::vector<std::pair<std::string, bool>> expected{{"F4/F2", true},         {"F2+F2", true},
                                                           {"F2[t]/(t^3)", true},   {"F3[t]/(t^2+1)", true},
                                                           {"M2(F2)", false},       {"F3+F3", true}};
  for (const auto& [name, want] : expected) {
    rec.check("expected", name, [&, want = want, name = name]() -> Outcome {
      const bool got = is_quasi_stable(catalog_entry(name).algebra, opts.scan);
      return got == want ? ok() : bad("is_quasi_stable = " + std::string(got ? "true" : "false"));
    });
  }
  for (const auto& entry : catalog()) {
    if (subspace_total(entry.algebra) > 2000) continue;
    rec.check("definition", entry.name, [&]() -> Outcome {
      const bool verdict = is_quasi_stable(entry.algebra, opts.scan);
      const auto def = all_without_one(entry.algebra, [&](const Subspace& v, Theta t) { return oracle_mathieu(v, t, opts.scan); });
      for (std::size_t t = 0; t < 4; ++t) {
        if (def[t] != verdict) return bad(std::string(theta_name(kAllThetas[t])) + " disagrees");
      }
      return ok();
    });
  }
}

void suite_stable(Recorder& rec) {
  const auto& opts = rec.opts();
  const std::vector<std::pair<std::string, bool>> expected{
      {"F2", true}, {"F3", true}, {"F2+F2", true}, {"F3+F3", false}, {"F4/F2", false}, {"M2(F2)", false}};
  for (const auto& [name, want] : expected) {
    rec.check("expected", name, [&, want = want, name = name]() -> Outcome {
      const bool got = is_stable(catalog_entry(name).algebra, opts.scan);
      return got == want ? ok() : bad("is_stable = " + std::string(got ? "true" : "false"));
    });
  }
  for (const auto& entry : catalog()) {
    if (subspace_total(entry.algebra) > 2000) continue;
    rec.check("definition", entry.name, [&]() -> Outcome {
      const bool verdict = is_stable(entry.algebra, opts.scan);
      const auto def = all_without_one(entry.algebra, [](const Subspace& v, Theta t) { return is_theta_ideal(v, t); });
      for (std::size_t t = 0; t < 4; ++t) {
        if (def[t] != verdict) return bad(std::string(theta_name(kAllThetas[t])) + " disagrees");
      }
      return ok();
    });
  }
}

// ---------------------------------------------------------------------------
// strongly_simple

void suite_strongly_simple(Recorder& rec) {
  const auto& opts = rec.opts();
  for (const auto& entry : catalog()) {
    if (!over_f2_f3(entry)) continue;
    rec.check("find_nontrivial", entry.name, [&]() -> Outcome {
      const Algebra& a = entry.algebra;
      if (a.dim() == 1) {
        try {
          find_nontrivial_mathieu(a, opts.scan);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::OnlyTrivial) return ok();
          throw;
        }
        return bad("dimension 1 but a nontrivial subspace was reported");
      }
      const Subspace s = find_nontrivial_mathieu(a, opts.scan);
      if (s.is_zero() || s.is_whole()) return bad("trivial subspace returned");
      if (!decide_mathieu(s, Theta::TwoSided, opts.scan).is_mathieu) return bad("not Mathieu: " + show(s));
      if (small(entry, 20'000) && !oracle_mathieu(s, Theta::TwoSided, opts.scan)) return bad("oracle rejects " + show(s));
      return ok();
    });
  }
  for (const std::string name : {"F2", "F2+F2", "F2[t]/(t^2)", "F4/F2", "M2(F2)"}) {
    rec.check("lattice", name, [&]() -> Outcome {
      const Algebra& a = catalog_entry(name).algebra;
      const MathieuLattice lat = enumerate_all_mathieu(a, Theta::TwoSided, opts.scan);
      if (a.dim() == 1) return lat.all.size() == 2 ? ok() : bad("dimension 1 with nontrivial Mathieu subspaces");
      if (lat.maximal_nontrivial.empty()) return bad("no maximal nontrivial Mathieu subspace");
      if (a.matrix_order()) {
        std::vector<Subspace> lines;
        for (const auto& l : all_subspaces(a, 1)) {
          if (!is_quasi_idempotent(a.element(l.basis()[0]))) lines.push_back(l);
        }
        if (lines != lat.minimal_nonzero) return bad("minimal nonzero Mathieu subspaces differ from non-quasi-idempotent lines");
      }
      return ok();
    });
  }
}

using SuiteFn = void (*)(Recorder&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"radical_laws", suite_radical_laws}, {"idempotent_criterion", suite_idempotent_criterion},
      {"codim1", suite_codim1},             {"lines", suite_lines},
      {"quasi_stable", suite_quasi_stable}, {"stable", suite_stable},
      {"strongly_simple", suite_strongly_simple}, {"closure_laws", suite_closure_laws}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"radical_laws", "idempotent_criterion", "codim1",          "lines",
                                              "quasi_stable", "stable",               "strongly_simple", "closure_laws"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opts) {
  auto it = registry().find(std::string(name));
  if (it == registry().end()) fail(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  Recorder rec(it->first, opts);
  it->second(rec);
  return rec.take();
}

}  // namespace mk
