#include "mathieu_kit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "json_io.hpp"

struct mk_algebra {
  mk::Algebra algebra;
};

struct mk_subspace {
  mk::Subspace subspace;
};

namespace {

thread_local std::string g_last_error;

template <typename Body>
mk_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return MK_OK;
  } catch (const mk::Error& e) {
    g_last_error = e.what();
    return static_cast<mk_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("ParseError: ") + e.what();
    return MK_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "TooLarge: out of memory";
    return MK_TOO_LARGE;
  } catch (const std::exception& e) {
    g_last_error = std::string("Internal: ") + e.what();
    return MK_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) mk::fail(mk::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const mk::Json& j, char** out) {
  require(out, "output pointer");
  *out = dup(j.dump());
}

mk::ScanOptions scan(const mk_scan_options* opts) {
  mk::ScanOptions s;
  if (opts) {
    if (opts->max_scan) s.max_scan = opts->max_scan;
    s.jobs = opts->jobs;
  }
  return s;
}

const mk::Algebra& alg(const mk_algebra* a) {
  require(a, "algebra");
  return a->algebra;
}

const mk::Subspace& sub(const mk_subspace* v) {
  require(v, "subspace");
  return v->subspace;
}

mk::Element element(const mk::Algebra& a, const char* text) {
  require(text, "element");
  return mk::element_from_json(a, mk::parse_json(text));
}

mk::Theta theta(const char* text) {
  require(text, "theta");
  return mk::parse_theta(text);
}

mk::Json element_list(const std::vector<mk::Element>& xs) {
  mk::Json out = mk::Json::array();
  for (const auto& x : xs) out.push_back(mk::vector_to_json(x.coords()));
  return out;
}

}  // namespace

extern "C" {

const char* mk_last_error(void) { return g_last_error.c_str(); }

const char* mk_status_name(mk_status status) {
  if (status == MK_OK) return "Ok";
  if (status < 1 || status > MK_INTERNAL) return "Unknown";
  return mk::error_code_name(static_cast<mk::ErrorCode>(status)).data();
}

void mk_string_free(char* s) { std::free(s); }

uint64_t mk_default_max_scan(void) { return mk::ScanOptions{}.max_scan; }
uint64_t mk_default_seed(void) { return mk::kDefaultSeed; }

mk_status mk_algebra_parse(const char* spec, mk_algebra** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "output pointer");
    *out = new mk_algebra{mk::parse_algebra_spec(spec)};
  });
}

void mk_algebra_free(mk_algebra* a) { delete a; }

mk_status mk_algebra_dim(const mk_algebra* a, size_t* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = alg(a).dim();
  });
}

mk_status mk_algebra_to_json(const mk_algebra* a, char** out) {
  return guarded([&] { emit(mk::algebra_to_json(alg(a)), out); });
}

mk_status mk_algebra_info(const mk_algebra* a, char** out) {
  return guarded([&] {
    const mk::Algebra& x = alg(a);
    mk::Json j;
    j["label"] = x.label();
    j["dim"] = x.dim();
    j["field"] = x.field().name();
    j["commutative"] = x.is_commutative();
    if (x.matrix_order()) j["matrix_order"] = *x.matrix_order();
    emit(j, out);
  });
}

mk_status mk_catalog(char** out) {
  return guarded([&] {
    mk::Json j = mk::Json::array();
    for (const auto& e : mk::catalog()) {
      j.push_back({{"name", e.name}, {"label", e.algebra.label()}, {"tags", e.tags}, {"provenance", e.provenance}});
    }
    emit(j, out);
  });
}

mk_status mk_elem_minpoly(const mk_algebra* a, const char* elem, char** out) {
  return guarded([&] { emit(mk::minpoly_to_json(mk::minimal_polynomial(element(alg(a), elem))), out); });
}

mk_status mk_elem_classify(const mk_algebra* a, const char* elem, char** out) {
  return guarded([&] { emit(mk::class_to_json(mk::classify_element(element(alg(a), elem))), out); });
}

mk_status mk_elem_pofa(const mk_algebra* a, const char* elem, char** out) {
  return guarded([&] { emit(mk::pofa_to_json(mk::build_p_of_a(element(alg(a), elem))), out); });
}

mk_status mk_elem_cycle(const mk_algebra* a, const char* elem, const mk_scan_options* opts, char** out) {
  return guarded([&] {
    const mk::CycleInfo c = mk::power_cycle(element(alg(a), elem), scan(opts).max_scan);
    emit({{"preperiod", c.preperiod}, {"period", c.period}}, out);
  });
}

mk_status mk_subspace_parse(const mk_algebra* a, const char* doc, mk_subspace** out) {
  return guarded([&] {
    require(doc, "subspace document");
    require(out, "output pointer");
    *out = new mk_subspace{mk::subspace_from_json(alg(a), mk::parse_json(doc))};
  });
}

void mk_subspace_free(mk_subspace* v) { delete v; }

mk_status mk_subspace_dim(const mk_subspace* v, size_t* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = sub(v).dim();
  });
}

mk_status mk_subspace_to_json(const mk_subspace* v, char** out) {
  return guarded([&] { emit(mk::subspace_to_json(sub(v)), out); });
}

mk_status mk_space_check(const mk_subspace* v, const char* th, const mk_scan_options* opts, int* is_mathieu, char** verdict) {
  return guarded([&] {
    const mk::MathieuVerdict r = mk::decide_mathieu(sub(v), theta(th), scan(opts));
    if (is_mathieu) *is_mathieu = r.is_mathieu;
    if (verdict) emit(mk::verdict_to_json(r), verdict);
  });
}

mk_status mk_space_oracle(const mk_subspace* v, const char* th, const mk_scan_options* opts, int* is_mathieu) {
  return guarded([&] {
    require(is_mathieu, "output pointer");
    *is_mathieu = mk::oracle_mathieu(sub(v), theta(th), scan(opts));
  });
}

mk_status mk_space_verify_witness(const mk_subspace* v, const char* verdict, int* valid) {
  return guarded([&] {
    require(verdict, "verdict");
    require(valid, "output pointer");
    const mk::Subspace& s = sub(v);
    const mk::MathieuVerdict r = mk::verdict_from_json(s.ambient(), mk::parse_json(verdict));
    if (!r.witness) mk::fail(mk::ErrorCode::InvalidArgument, "the verdict carries no witness");
    *valid = mk::verify_witness(s, r.theta, *r.witness);
  });
}

mk_status mk_space_radical_member(const mk_subspace* v, const char* elem, int* member) {
  return guarded([&] {
    require(member, "output pointer");
    const mk::Subspace& s = sub(v);
    *member = mk::radical_member(s, element(s.ambient(), elem));
  });
}

mk_status mk_space_radical_enum(const mk_subspace* v, const mk_scan_options* opts, char** out) {
  return guarded([&] {
    const auto xs = mk::radical_enumerate(sub(v), scan(opts));
    emit({{"count", xs.size()}, {"elements", element_list(xs)}}, out);
  });
}

mk_status mk_space_certify(const mk_subspace* v, const char* th, const char* elem, const mk_scan_options* opts, char** out) {
  return guarded([&] {
    const mk::Subspace& s = sub(v);
    emit(mk::certificate_to_json(mk::certify_radical_membership(s, theta(th), element(s.ambient(), elem), scan(opts))), out);
  });
}

mk_status mk_space_max_ideal(const mk_subspace* v, const char* th, mk_subspace** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mk_subspace{mk::max_theta_ideal(sub(v), theta(th))};
  });
}

mk_status mk_space_theta_ideal(const mk_algebra* a, const char* elem, const char* th, mk_subspace** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mk_subspace{mk::theta_ideal(element(alg(a), elem), theta(th))};
  });
}

mk_status mk_mat_codim1(size_t n, uint32_t q, const mk_scan_options* opts, char** out) {
  return guarded([&] {
    if (n == 0) mk::fail(mk::ErrorCode::InvalidArgument, "n must be positive");
    emit(mk::codim1_to_json(mk::classify_codim1(n, q, scan(opts))), out);
  });
}

mk_status mk_mat_lines(size_t n, uint32_t q, int with_oracle, const mk_scan_options* opts, char** out) {
  return guarded([&] {
    if (n == 0) mk::fail(mk::ErrorCode::InvalidArgument, "n must be positive");
    emit(mk::lines_to_json(mk::classify_lines(n, q, with_oracle != 0, scan(opts))), out);
  });
}

mk_status mk_mat_dual(const mk_subspace* v, char** out) {
  return guarded([&] { emit({{"x", mk::vector_to_json(mk::trace_dual(sub(v)).x.coords())}}, out); });
}

mk_status mk_mat_witness(const mk_algebra* a, const char* x, char** out) {
  return guarded([&] {
    const mk::IdempotentWitnesses w = mk::witness_idempotents(element(alg(a), x));
    emit({{"a", mk::vector_to_json(w.a.coords())}, {"b", mk::vector_to_json(w.b.coords())}}, out);
  });
}

mk_status mk_alg_quasi_stable(const mk_algebra* a, const mk_scan_options* opts, int* result) {
  return guarded([&] {
    require(result, "output pointer");
    *result = mk::is_quasi_stable(alg(a), scan(opts));
  });
}

mk_status mk_alg_stable(const mk_algebra* a, const mk_scan_options* opts, int* result) {
  return guarded([&] {
    require(result, "output pointer");
    *result = mk::is_stable(alg(a), scan(opts));
  });
}

mk_status mk_alg_find_ms(const mk_algebra* a, const mk_scan_options* opts, mk_subspace** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mk_subspace{mk::find_nontrivial_mathieu(alg(a), scan(opts))};
  });
}

mk_status mk_suite_names(char** out) {
  return guarded([&] { emit(mk::suite_names(), out); });
}

mk_status mk_suite_run(const char* name, uint64_t seed, int timing, const mk_scan_options* opts, char** out, int* all_pass) {
  return guarded([&] {
    require(name, "suite name");
    require(out, "output pointer");
    mk::SuiteOptions o;
    o.seed = seed;
    o.timing = timing != 0;
    o.scan = scan(opts);
    std::string lines;
    bool pass = true;
    for (const auto& r : mk::run_suite(name, o)) {
      lines += mk::check_result_to_json(r).dump();
      lines += '\n';
      pass = pass && r.pass;
    }
    *out = dup(lines);
    if (all_pass) *all_pass = pass;
  });
}

}  // extern "C"
