#pragma once

// JSON documents for algebras, elements, subspaces and reports, plus the
// shorthand algebra specs accepted on the command line.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "experiments.hpp"

namespace mk {

using Json = nlohmann::ordered_json;

/// F_p scalars as integers; Q scalars as integers when whole, else "n/d".
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(FieldSpec field, const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(FieldSpec field, const Json& j, std::size_t dim);

Json algebra_to_json(const Algebra& a);
/// Full documents and the named constructors matrix, poly_quotient,
/// direct_sum, opposite. Throws ParseError, plus whatever make() throws.
Algebra algebra_from_json(const Json& j);
/// `mat:n:p`, `polyq:p:c0,...,1`, `dsum:A+B`, `opp:A`, `field:p`, a catalog
/// name, or JSON text.
Algebra parse_algebra_spec(std::string_view text);

/// Bare coordinate array or {"coords": [...]}.
Element element_from_json(const Algebra& a, const Json& j);
Json element_to_json(const Element& e);

Json subspace_to_json(const Subspace& v);
/// {"basis": [[...], ...]} (an "ambient" label is ignored) or a bare list.
Subspace subspace_from_json(const Algebra& a, const Json& j);

Json verdict_to_json(const MathieuVerdict& v);
MathieuVerdict verdict_from_json(const Algebra& a, const Json& j);
Json certificate_to_json(const RadicalCertificate& c);
Json minpoly_to_json(const MinPolyData& m);
Json class_to_json(const ElementClass& c);
Json pofa_to_json(const PofA& p);
Json codim1_to_json(const Codim1Report& r);
Json lines_to_json(const LinesReport& r);
Json check_result_to_json(const CheckResult& r);
Json theta_counts(const std::array<std::uint64_t, 4>& counts);

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace mk
