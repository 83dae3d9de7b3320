#pragma once

// JSON wire formats. Scalars are always JSON strings in the textual scalar
// format; polynomials are arrays of scalars indexed by power; matrices are
// {"n": n, "rows": [[...], ...]} (a bare array of rows is also accepted on
// input). Output objects keep a fixed field order.

#include <string>
#include <string_view>

#include "json.hpp"
#include "mrange/entire.hpp"
#include "mrange/matrix.hpp"
#include "mrange/range.hpp"

namespace mrange::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);

GaussianRational scalar_from_json(const Json& j, const std::string& where = "");
Json to_json(const GaussianRational& x);

Poly poly_from_json(const Json& j, const std::string& where = "");
Json to_json(const Poly& p);

MatrixQi matrix_from_json(const Json& j, const std::string& where = "");
Json to_json(const MatrixQi& m);

/// {"type":"polynomial","coeffs":[...]} | {"type":"sin_family","a","b","c","d"}
/// | {"type":"exp_poly","v","p_coeffs":[...],"c","d"}
EntireFunction function_from_json(const Json& j);
Json to_json(const EntireFunction& f);

Json to_json(const RamificationProfile& p);
Json to_json(const RangeVerdict& v);
Json to_json(const RangeDescription& d);
Json to_json(const SegrePartition& s);

/// Indented "key: value" rendering of a JSON document for text output.
std::string render_text(const Json& j);

}  // namespace mrange::io
