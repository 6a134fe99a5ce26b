#include "json_io.hpp"

#include <cctype>
#include <charconv>

namespace mk {

namespace {

std::uint64_t as_count(const Json& j, std::string_view what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

FieldSpec field_of(const Json& j) {
  if (j.is_number_integer()) return FieldSpec::from_characteristic(as_count(j, "p"));
  return FieldSpec::from_characteristic(as_count(member(j, "p"), "p"));
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::ParseError, "not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

Json rows_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vector_to_json(row));
  return out;
}

std::vector<Vector> rows_from_json(FieldSpec field, const Json& j, std::size_t dim) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected a list of vectors");
  std::vector<Vector> out;
  for (const auto& row : j) out.push_back(vector_from_json(field, row, dim));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json scalar_to_json(const Scalar& s) {
  if (s.characteristic() != 0) return s.residue_value();
  const mpq_class& q = s.rational_value();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

Scalar scalar_from_json(FieldSpec field, const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return field.from_mpz(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return field.from_int(j.get<std::int64_t>());
  }
  if (j.is_string()) return field.parse(j.get<std::string>());
  fail(ErrorCode::ParseError, "scalar must be an integer or a \"n/d\" string, got " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(FieldSpec field, const Json& j, std::size_t dim) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected a coordinate list, got " + j.dump());
  if (j.size() != dim) {
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  }
  Vector out;
  for (const auto& x : j) out.push_back(scalar_from_json(field, x));
  return out;
}

// ---------------------------------------------------------------------------

Json algebra_to_json(const Algebra& a) {
  Json table = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vector_to_json(a.basis_product(i, j)));
    table.push_back(std::move(row));
  }
  Json out;
  out["field"] = {{"p", a.field().characteristic()}};
  out["dim"] = a.dim();
  out["table"] = std::move(table);
  out["unit"] = vector_to_json(a.unit());
  out["label"] = a.label();
  return out;
}

Algebra algebra_from_json(const Json& j) {
  if (j.is_string()) return parse_algebra_spec(j.get<std::string>());
  if (!j.is_object()) fail(ErrorCode::ParseError, "algebra must be an object or a spec string");
  if (j.contains("matrix")) {
    const Json& m = j.at("matrix");
    const FieldSpec f = m.contains("p") ? field_of(m.at("p")) : field_of(member(j, "field"));
    const std::uint64_t n = as_count(member(m, "n"), "n");
    if (n == 0) fail(ErrorCode::InvalidArgument, "matrix order must be positive");
    return from_matrix_algebra(n, f);
  }
  if (j.contains("poly_quotient")) {
    const Json& m = j.at("poly_quotient");
    const FieldSpec f = m.contains("p") ? field_of(m.at("p")) : field_of(member(j, "field"));
    const Json& coeffs = member(m, "modulus");
    if (!coeffs.is_array()) fail(ErrorCode::ParseError, "modulus must be a coefficient list");
    std::vector<Scalar> cs;
    for (const auto& c : coeffs) cs.push_back(scalar_from_json(f, c));
    return from_poly_quotient(Poly(f, std::move(cs)));
  }
  if (j.contains("direct_sum")) {
    const Json& parts = j.at("direct_sum");
    if (!parts.is_array() || parts.size() != 2) fail(ErrorCode::ParseError, "direct_sum takes two algebra specs");
    return direct_sum(algebra_from_json(parts[0]), algebra_from_json(parts[1]));
  }
  if (j.contains("opposite")) return opposite(algebra_from_json(j.at("opposite")));

  const FieldSpec f = field_of(member(j, "field"));
  const std::uint64_t d = as_count(member(j, "dim"), "dim");
  const Json& table = member(j, "table");
  if (!table.is_array() || table.size() != d) fail(ErrorCode::InvalidArgument, "table must have dim rows");
  StructureTable t;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != d) fail(ErrorCode::InvalidArgument, "every table row must have dim entries");
    std::vector<Vector> r;
    for (const auto& entry : row) r.push_back(vector_from_json(f, entry, d));
    t.push_back(std::move(r));
  }
  Vector unit = vector_from_json(f, member(j, "unit"), d);
  std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "A";
  return Algebra::make(f, std::move(t), std::move(unit), std::move(label));
}

Algebra parse_algebra_spec(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) fail(ErrorCode::ParseError, "empty algebra spec");
  if (text.front() == '{' || text.front() == '"') return algebra_from_json(parse_json(text));
  for (const auto& entry : catalog()) {
    if (entry.name == text) return entry.algebra;
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::ParseError, "unrecognized algebra spec '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "mat") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) fail(ErrorCode::ParseError, "expected mat:n:p");
    const std::uint64_t n = parse_uint(parts[0]);
    if (n == 0) fail(ErrorCode::InvalidArgument, "matrix order must be positive");
    return from_matrix_algebra(n, FieldSpec::from_characteristic(parse_uint(parts[1])));
  }
  if (kind == "field") return field_algebra(FieldSpec::from_characteristic(parse_uint(rest)));
  if (kind == "polyq") {
    const auto at = rest.find(':');
    if (at == std::string_view::npos) fail(ErrorCode::ParseError, "expected polyq:p:c0,c1,...,1");
    const FieldSpec f = FieldSpec::from_characteristic(parse_uint(rest.substr(0, at)));
    std::vector<Scalar> cs;
    for (auto c : split(rest.substr(at + 1), ',')) cs.push_back(f.parse(c));
    return from_poly_quotient(Poly(f, std::move(cs)));
  }
  if (kind == "opp") return opposite(parse_algebra_spec(rest));
  if (kind == "dsum") {
    // The first '+' that leaves two valid specs.
    for (std::size_t pos = rest.find('+'); pos != std::string_view::npos; pos = rest.find('+', pos + 1)) {
      try {
        Algebra left = parse_algebra_spec(rest.substr(0, pos));
        Algebra right = parse_algebra_spec(rest.substr(pos + 1));
        return direct_sum(left, right);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
      }
    }
    fail(ErrorCode::ParseError, "expected dsum:A+B, got '" + std::string(text) + "'");
  }
  fail(ErrorCode::ParseError, "unknown algebra spec kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------

Element element_from_json(const Algebra& a, const Json& j) {
  const Json& coords = j.is_object() ? member(j, "coords") : j;
  return a.element(vector_from_json(a.field(), coords, a.dim()));
}

Json element_to_json(const Element& e) { return {{"coords", vector_to_json(e.coords())}}; }

Json subspace_to_json(const Subspace& v) {
  Json out;
  out["ambient"] = v.ambient().label();
  out["basis"] = rows_to_json(v.basis());
  return out;
}

Subspace subspace_from_json(const Algebra& a, const Json& j) {
  const Json& rows = j.is_object() ? member(j, "basis") : j;
  return Subspace::span(a, rows_from_json(a.field(), rows, a.dim()));
}

Json verdict_to_json(const MathieuVerdict& v) {
  Json out;
  out["is_mathieu"] = v.is_mathieu;
  out["theta"] = std::string(theta_name(v.theta));
  out["method"] = std::string(method_name(v.method));
  if (v.witness) {
    Json w;
    w["e"] = vector_to_json(v.witness->e);
    if (v.witness->b) w["b"] = vector_to_json(*v.witness->b);
    if (v.witness->c) w["c"] = vector_to_json(*v.witness->c);
    w["product"] = vector_to_json(v.witness->product);
    out["witness"] = std::move(w);
  }
  return out;
}

MathieuVerdict verdict_from_json(const Algebra& a, const Json& j) {
  MathieuVerdict v;
  const Json& flag = member(j, "is_mathieu");
  if (!flag.is_boolean()) fail(ErrorCode::ParseError, "is_mathieu must be a boolean");
  v.is_mathieu = flag.get<bool>();
  v.theta = parse_theta(member(j, "theta").get<std::string>());
  v.method = parse_method(member(j, "method").get<std::string>());
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    Witness out;
    out.e = vector_from_json(a.field(), member(w, "e"), a.dim());
    if (w.contains("b")) out.b = vector_from_json(a.field(), w.at("b"), a.dim());
    if (w.contains("c")) out.c = vector_from_json(a.field(), w.at("c"), a.dim());
    out.product = vector_from_json(a.field(), member(w, "product"), a.dim());
    v.witness = std::move(out);
  }
  return v;
}

Json certificate_to_json(const RadicalCertificate& c) {
  Json out;
  out["N"] = c.exponent;
  out["ideal_basis"] = rows_to_json(c.ideal.basis());
  return out;
}

Json minpoly_to_json(const MinPolyData& m) {
  Json out;
  out["minpoly"] = vector_to_json(m.minpoly.coefficients());
  out["k"] = m.k;
  out["h"] = vector_to_json(m.h.coefficients());
  out["text"] = m.minpoly.to_string();
  return out;
}

Json class_to_json(const ElementClass& c) {
  Json out;
  out["nilpotent"] = c.nilpotent;
  out["invertible"] = c.invertible;
  out["idempotent"] = c.idempotent;
  out["quasi_idempotent"] = c.quasi_idempotent;
  if (c.ratio) out["ratio"] = scalar_to_json(*c.ratio);
  out["degree"] = c.degree;
  return out;
}

Json pofa_to_json(const PofA& p) {
  Json out;
  out["k"] = p.k;
  out["u"] = vector_to_json(p.u.coefficients());
  out["v"] = vector_to_json(p.v.coefficients());
  out["p"] = vector_to_json(p.p.coefficients());
  out["coords"] = vector_to_json(p.value.coords());
  return out;
}

Json theta_counts(const std::array<std::uint64_t, 4>& counts) {
  Json out;
  for (std::size_t t = 0; t < kAllThetas.size(); ++t) out[std::string(theta_name(kAllThetas[t]))] = counts[t];
  return out;
}

Json codim1_to_json(const Codim1Report& r) {
  Json out;
  out["n"] = r.n;
  out["q"] = r.q;
  out["total"] = r.total;
  out["per_theta"] = theta_counts(r.per_theta);
  Json reps = Json::array();
  for (const auto& x : r.representatives) reps.push_back(vector_to_json(x.coords()));
  out["representatives"] = std::move(reps);
  return out;
}

Json lines_to_json(const LinesReport& r) {
  Json out;
  out["n"] = r.n;
  out["q"] = r.q;
  out["total"] = r.total;
  out["per_theta"] = theta_counts(r.per_theta);
  out["quasi_idempotent"] = r.quasi_idempotent;
  out["consistent"] = r.consistent;
  out["oracle_checked"] = r.oracle_checked;
  if (r.oracle_checked) out["oracle_agrees"] = r.oracle_agrees;
  return out;
}

Json check_result_to_json(const CheckResult& r) {
  Json out;
  out["suite"] = r.suite;
  out["check"] = r.check;
  out["instance"] = r.instance;
  out["pass"] = r.pass;
  if (r.witness) out["witness"] = *r.witness;
  out["millis"] = r.millis;
  out["seed"] = r.seed;
  return out;
}

}  // namespace mk
