#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mathieu_kit.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string message;
};

struct Options {
  std::string algebra;
  std::string elem;
  std::string basis;
  std::string theta = "two_sided";
  std::string input;
  std::string suite;
  bool json = false;
  bool timing = false;
  bool oracle = false;
  std::uint64_t max_scan = 0;
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::uint32_t q = 0;
};

void check(mk_status s) {
  if (s != MK_OK) throw Failure{mk_last_error()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@file" reads the file, anything else is taken literally.
std::string text_arg(const std::string& value, const char* flag) {
  if (value.empty()) throw Failure{std::string("missing ") + flag};
  return value[0] == '@' ? slurp(value.substr(1)) : value;
}

std::string take(char* s) {
  std::string out(s);
  mk_string_free(s);
  return out;
}

struct Algebra {
  mk_algebra* h = nullptr;
  explicit Algebra(const Options& o) { check(mk_algebra_parse(text_arg(o.algebra, "--algebra").c_str(), &h)); }
  ~Algebra() { mk_algebra_free(h); }
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;
};

struct Subspace {
  mk_subspace* h = nullptr;
  Subspace() = default;
  Subspace(const Algebra& a, const Options& o) { check(mk_subspace_parse(a.h, text_arg(o.basis, "--basis").c_str(), &h)); }
  ~Subspace() { mk_subspace_free(h); }
  Subspace(const Subspace&) = delete;
  Subspace& operator=(const Subspace&) = delete;
  Json doc() const {
    char* s = nullptr;
    check(mk_subspace_to_json(h, &s));
    return Json::parse(take(s));
  }
};

mk_scan_options scan(const Options& o) { return {o.max_scan, o.jobs}; }

// Aligned key/value rendering of a JSON object.
void render(const Json& j, std::ostream& out, int indent = 0) {
  if (!j.is_object()) {
    out << std::string(indent, ' ') << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    out << std::string(indent, ' ') << std::left << std::setw(static_cast<int>(width) + 2) << k;
    if (v.is_object()) {
      out << "\n";
      render(v, out, indent + 2);
    } else {
      out << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

struct Result {
  Json doc;
  std::optional<bool> verdict{};  // set for check verbs
  std::string text{};             // overrides the generic rendering
  std::string raw{};              // overrides doc.dump() under --json
};

Json parse_document(const std::string& text) {
  Json whole = Json::parse(text, nullptr, false);
  if (!whole.is_discarded()) return whole;
  // JSON lines, as emitted by suite run.
  Json lines = Json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) return j;
    lines.push_back(std::move(j));
  }
  return lines;
}

int finish(const Options& o, const Result& r) {
  if (!o.input.empty()) {
    const Json stored = parse_document(slurp(o.input));
    if (stored.is_discarded()) throw Failure{"'" + o.input + "' is not JSON"};
    const bool same = stored == r.doc;
    if (o.json) {
      std::cout << Json{{"input", o.input}, {"reproduced", same}}.dump() << "\n";
    } else {
      std::cout << (same ? "reproduced" : "differs") << "\n";
    }
    return same ? 0 : kExitFalse;
  }
  if (o.json) {
    if (r.raw.empty()) {
      std::cout << r.doc.dump() << "\n";
    } else {
      std::cout << r.raw;
    }
  } else if (!r.text.empty()) {
    std::cout << r.text;
  } else {
    render(r.doc, std::cout);
  }
  return r.verdict.value_or(true) ? 0 : kExitFalse;
}

std::string verdict_text(bool v, const Json& detail) {
  std::ostringstream ss;
  ss << (v ? "true" : "false") << "\n";
  render(detail, ss);
  return ss.str();
}

// --- verbs -------------------------------------------------------------------

Result algebra_validate(const Options& o) {
  mk_algebra* h = nullptr;
  const mk_status s = mk_algebra_parse(text_arg(o.algebra, "--algebra").c_str(), &h);
  if (s == MK_NOT_ASSOCIATIVE || s == MK_BAD_UNIT) {
    Json doc{{"valid", false}, {"error", mk_status_name(s)}, {"message", mk_last_error()}};
    return {doc, false, std::string("invalid\n") + mk_last_error() + "\n"};
  }
  check(s);
  char* out = nullptr;
  const mk_status t = mk_algebra_info(h, &out);
  mk_algebra_free(h);
  check(t);
  Json doc{{"valid", true}};
  const Json info = Json::parse(take(out));
  for (auto& [k, v] : info.items()) doc[k] = v;
  return {doc, true, {}};
}

Result algebra_info(const Options& o) {
  Algebra a(o);
  char* info = nullptr;
  char* full = nullptr;
  check(mk_algebra_info(a.h, &info));
  Json summary = Json::parse(take(info));
  if (!o.json && o.input.empty()) return {summary, std::nullopt, {}};
  check(mk_algebra_to_json(a.h, &full));
  Json doc = Json::parse(take(full));
  doc["commutative"] = summary["commutative"];
  if (summary.contains("matrix_order")) doc["matrix_order"] = summary["matrix_order"];
  return {doc, std::nullopt, {}};
}

Result elem_verb(const Options& o, mk_status (*fn)(const mk_algebra*, const char*, char**)) {
  Algebra a(o);
  char* out = nullptr;
  check(fn(a.h, text_arg(o.elem, "--elem").c_str(), &out));
  return {Json::parse(take(out)), std::nullopt, {}};
}

Result elem_cycle(const Options& o) {
  Algebra a(o);
  const mk_scan_options s = scan(o);
  char* out = nullptr;
  check(mk_elem_cycle(a.h, text_arg(o.elem, "--elem").c_str(), &s, &out));
  return {Json::parse(take(out)), std::nullopt, {}};
}

Result space_check(const Options& o) {
  Algebra a(o);
  Subspace v(a, o);
  const mk_scan_options s = scan(o);
  int is = 0;
  char* out = nullptr;
  check(mk_space_check(v.h, o.theta.c_str(), &s, &is, &out));
  Json doc = Json::parse(take(out));
  Json detail;
  detail["method"] = doc["method"];
  if (doc.contains("witness")) detail["witness"] = doc["witness"];
  return {doc, is != 0, verdict_text(is != 0, detail)};
}

Result space_radical_member(const Options& o) {
  Algebra a(o);
  Subspace v(a, o);
  int member = 0;
  check(mk_space_radical_member(v.h, text_arg(o.elem, "--elem").c_str(), &member));
  return {Json{{"member", member != 0}}, member != 0, member ? "true\n" : "false\n"};
}

Result space_radical_enum(const Options& o) {
  Algebra a(o);
  Subspace v(a, o);
  const mk_scan_options s = scan(o);
  char* out = nullptr;
  check(mk_space_radical_enum(v.h, &s, &out));
  Json doc = Json::parse(take(out));
  std::ostringstream ss;
  ss << "count  " << doc["count"].get<std::uint64_t>() << "\n";
  for (const auto& e : doc["elements"]) ss << "  " << e.dump() << "\n";
  return {doc, std::nullopt, ss.str()};
}

Result space_certify(const Options& o) {
  Algebra a(o);
  Subspace v(a, o);
  const mk_scan_options s = scan(o);
  char* out = nullptr;
  check(mk_space_certify(v.h, o.theta.c_str(), text_arg(o.elem, "--elem").c_str(), &s, &out));
  return {Json::parse(take(out)), std::nullopt, {}};
}

Result space_max_ideal(const Options& o) {
  Algebra a(o);
  Subspace v(a, o);
  Subspace w;
  check(mk_space_max_ideal(v.h, o.theta.c_str(), &w.h));
  return {w.doc(), std::nullopt, {}};
}

Result space_theta_ideal(const Options& o) {
  Algebra a(o);
  Subspace w;
  check(mk_space_theta_ideal(a.h, text_arg(o.elem, "--elem").c_str(), o.theta.c_str(), &w.h));
  return {w.doc(), std::nullopt, {}};
}

std::string theta_table(const Json& doc) {
  std::ostringstream ss;
  ss << "M_" << doc["n"].get<std::size_t>() << "(F_" << doc["q"].get<std::uint32_t>() << ")  total "
     << doc["total"].get<std::uint64_t>() << "\n";
  ss << std::left << std::setw(16) << "theta" << "mathieu\n";
  for (const auto& [k, v] : doc["per_theta"].items()) ss << std::left << std::setw(16) << k << v.get<std::uint64_t>() << "\n";
  return ss.str();
}

void require_nq(const Options& o) {
  if (o.n == 0 || o.q == 0) throw Failure{"--n and --q are required"};
}

Result mat_codim1(const Options& o) {
  require_nq(o);
  const mk_scan_options s = scan(o);
  char* out = nullptr;
  check(mk_mat_codim1(o.n, o.q, &s, &out));
  Json doc = Json::parse(take(out));
  std::string text = theta_table(doc);
  for (const auto& x : doc["representatives"]) text += "representative  " + x.dump() + "\n";
  return {doc, std::nullopt, text};
}

Result mat_lines(const Options& o) {
  require_nq(o);
  const mk_scan_options s = scan(o);
  char* out = nullptr;
  check(mk_mat_lines(o.n, o.q, o.oracle ? 1 : 0, &s, &out));
  Json doc = Json::parse(take(out));
  std::string text = theta_table(doc);
  text += "quasi_idempotent  " + doc["quasi_idempotent"].dump() + "\n";
  text += "consistent        " + doc["consistent"].dump() + "\n";
  if (doc.contains("oracle_agrees")) text += "oracle_agrees     " + doc["oracle_agrees"].dump() + "\n";
  return {doc, std::nullopt, text};
}

Result mat_dual(const Options& o) {
  Algebra a(o);
  Subspace v(a, o);
  char* out = nullptr;
  check(mk_mat_dual(v.h, &out));
  return {Json::parse(take(out)), std::nullopt, {}};
}

Result mat_witness(const Options& o) {
  Algebra a(o);
  char* out = nullptr;
  check(mk_mat_witness(a.h, text_arg(o.elem, "--elem").c_str(), &out));
  return {Json::parse(take(out)), std::nullopt, {}};
}

Result alg_flag(const Options& o, mk_status (*fn)(const mk_algebra*, const mk_scan_options*, int*), const char* key) {
  Algebra a(o);
  const mk_scan_options s = scan(o);
  int r = 0;
  check(fn(a.h, &s, &r));
  return {Json{{key, r != 0}}, r != 0, r ? "true\n" : "false\n"};
}

Result alg_find_ms(const Options& o) {
  Algebra a(o);
  const mk_scan_options s = scan(o);
  Subspace w;
  check(mk_alg_find_ms(a.h, &s, &w.h));
  return {w.doc(), std::nullopt, {}};
}

Result suite_run(const Options& o) {
  const mk_scan_options s = scan(o);
  char* out = nullptr;
  int pass = 0;
  check(mk_suite_run(o.suite.c_str(), o.seed, o.timing ? 1 : 0, &s, &out, &pass));
  const std::string lines = take(out);
  Json doc = Json::array();
  std::istringstream in(lines);
  for (std::string line; std::getline(in, line);) doc.push_back(Json::parse(line));
  std::ostringstream ss;
  std::size_t cw = 5, iw = 8;
  for (const auto& r : doc) {
    cw = std::max(cw, r["check"].get<std::string>().size());
    iw = std::max(iw, r["instance"].get<std::string>().size());
  }
  ss << std::left << std::setw(static_cast<int>(cw) + 2) << "check" << std::setw(static_cast<int>(iw) + 2) << "instance"
     << std::setw(6) << "pass" << "millis\n";
  for (const auto& r : doc) {
    ss << std::left << std::setw(static_cast<int>(cw) + 2) << r["check"].get<std::string>()
       << std::setw(static_cast<int>(iw) + 2) << r["instance"].get<std::string>() << std::setw(6)
       << (r["pass"].get<bool>() ? "yes" : "NO") << r["millis"].dump() << "\n";
    if (r.contains("witness")) ss << "  " << r["witness"].get<std::string>() << "\n";
  }
  ss << "seed " << o.seed << "\n";
  return {doc, pass != 0, ss.str(), lines};
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.seed = mk_default_seed();
  CLI::App app{"Mathieu subspaces of finite-dimensional algebras", "mathieu-kit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "Machine-readable output");
    c->add_option("--max-scan", o.max_scan, "Element evaluations per scan")->envname("MATHIEU_KIT_MAX_SCAN");
    c->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
    c->add_option("--input", o.input, "Re-check a document emitted earlier with --json");
  };

  std::map<CLI::App*, std::function<Result(const Options&)>> actions;
  auto verb = [&](CLI::App* group, const std::string& name, const std::string& help, std::function<Result(const Options&)> fn,
                  std::initializer_list<const char*> flags) {
    CLI::App* c = group->add_subcommand(name, help);
    common(c);
    for (std::string f : flags) {
      if (f == "algebra") c->add_option("--algebra", o.algebra, "Algebra spec, catalog name, JSON or @file")->required();
      if (f == "elem") c->add_option("--elem", o.elem, "Element coordinates as JSON or @file")->required();
      if (f == "basis") c->add_option("--basis", o.basis, "Subspace document as JSON or @file")->required();
      if (f == "theta") c->add_option("--theta", o.theta, "left, right, pre_two_sided or two_sided")->capture_default_str();
      if (f == "nq") {
        c->add_option("--n", o.n, "Matrix order")->required();
        c->add_option("--q", o.q, "Prime field size")->required();
      }
    }
    actions[c] = std::move(fn);
    return c;
  };

  CLI::App* algebra = app.add_subcommand("algebra", "Algebra documents")->require_subcommand(1);
  verb(algebra, "validate", "Check associativity and the unit", algebra_validate, {"algebra"});
  verb(algebra, "info", "Dimension, field and structure", algebra_info, {"algebra"});

  CLI::App* elem = app.add_subcommand("elem", "Single elements")->require_subcommand(1);
  verb(elem, "minpoly", "Minimal polynomial t^k h", [](const Options& x) { return elem_verb(x, mk_elem_minpoly); }, {"algebra", "elem"});
  verb(elem, "classify", "Nilpotent, invertible, idempotent, quasi-idempotent",
       [](const Options& x) { return elem_verb(x, mk_elem_classify); }, {"algebra", "elem"});
  verb(elem, "pofa", "The idempotent p(a)", [](const Options& x) { return elem_verb(x, mk_elem_pofa); }, {"algebra", "elem"});
  verb(elem, "cycle", "Preperiod and period of the powers", elem_cycle, {"algebra", "elem"});

  CLI::App* space = app.add_subcommand("space", "Subspaces")->require_subcommand(1);
  verb(space, "check", "Decide the Mathieu property", space_check, {"algebra", "basis", "theta"});
  verb(space, "radical-member", "Membership in the radical", space_radical_member, {"algebra", "basis", "elem"});
  verb(space, "radical-enum", "Every element of the radical", space_radical_enum, {"algebra", "basis"});
  verb(space, "certify", "Exponent N and ideal for a radical element", space_certify, {"algebra", "basis", "theta", "elem"});
  verb(space, "max-ideal", "Largest theta-ideal inside the subspace", space_max_ideal, {"algebra", "basis", "theta"});
  verb(space, "theta-ideal", "Theta-ideal generated by an element", space_theta_ideal, {"algebra", "elem", "theta"});

  CLI::App* mat = app.add_subcommand("mat", "Matrix algebras and the trace pairing")->require_subcommand(1);
  verb(mat, "codim1", "Classify every hyperplane of M_n(F_q)", mat_codim1, {"nq"});
  verb(mat, "lines", "Classify every line of M_n(F_q)", mat_lines, {"nq"})->add_flag("--oracle", o.oracle, "Cross-check with the oracle");
  verb(mat, "dual", "X with V = H_X", mat_dual, {"algebra", "basis"});
  verb(mat, "witness", "Idempotents refuting H_X", mat_witness, {"algebra", "elem"});

  CLI::App* alg = app.add_subcommand("alg", "Algebra-level classifications")->require_subcommand(1);
  verb(alg, "quasi-stable", "Every subspace without 1 is Mathieu",
       [](const Options& x) { return alg_flag(x, mk_alg_quasi_stable, "quasi_stable"); }, {"algebra"});
  verb(alg, "stable", "Every subspace without 1 is an ideal",
       [](const Options& x) { return alg_flag(x, mk_alg_stable, "stable"); }, {"algebra"});
  verb(alg, "find-ms", "A nontrivial Mathieu subspace", alg_find_ms, {"algebra"});

  CLI::App* suite = app.add_subcommand("suite", "Scripted property suites")->require_subcommand(1);
  CLI::App* run = verb(suite, "run", "Run one suite", suite_run, {});
  run->add_option("name", o.suite, "Suite name")->required();
  run->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  run->add_flag("--timing", o.timing, "Record wall-clock milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  try {
    for (const auto& [cmd, fn] : actions) {
      if (cmd->parsed()) return finish(o, fn(o));
    }
    std::cerr << "error: no verb given\n" << app.help();
    return kExitError;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
