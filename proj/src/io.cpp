#include "mrange/io.hpp"

#include <sstream>

#include "mrange/errors.hpp"

namespace mrange::io {

namespace {

std::string at(const std::string& where) { return where.empty() ? "/" : where; }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("at " + at(where) + ": " + what);
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

void reject_unknown_fields(const Json& obj, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail(where, "unknown field \"" + key + "\"");
  }
}

Json parts_json(const std::vector<int>& parts) {
  Json arr = Json::array();
  for (int p : parts) arr.push_back(p);
  return arr;
}

void render_text_into(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty() && !(value.is_array() && !value.front().is_structured())) {
        os << pad << key << ":\n";
        render_text_into(value, indent + 1, os);
      } else {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object()) {
        os << pad << "-\n";
        render_text_into(value, indent + 1, os);
      } else {
        os << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

GaussianRational scalar_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a scalar string, got " + j.dump());
  try {
    return GaussianRational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Json to_json(const GaussianRational& x) { return x.to_string(); }

Poly poly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of coefficient strings");
  std::vector<GaussianRational> coeffs;
  for (std::size_t k = 0; k < j.size(); ++k) coeffs.push_back(scalar_from_json(j[k], where + "/" + std::to_string(k)));
  return Poly(std::move(coeffs));
}

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

MatrixQi matrix_from_json(const Json& j, const std::string& where) {
  const Json* rows = &j;
  std::string rows_where = where;
  std::optional<long long> declared;
  if (j.is_object()) {
    reject_unknown_fields(j, {"n", "rows"}, where);
    const Json& n = field(j, "n", where);
    if (!n.is_number_integer()) fail(where + "/n", "expected an integer");
    declared = n.get<long long>();
    rows = &field(j, "rows", where);
    rows_where = where + "/rows";
  }
  if (!rows->is_array()) fail(rows_where, "expected an array of rows");
  const std::size_t n = rows->size();
  if (n == 0) fail(rows_where, "matrix must have at least one row");
  if (declared && *declared != static_cast<long long>(n))
    fail(where + "/n", "declared n = " + std::to_string(*declared) + " but " + std::to_string(n) + " rows given");
  std::vector<GaussianRational> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = (*rows)[r];
    const std::string row_where = rows_where + "/" + std::to_string(r);
    if (!row.is_array()) fail(row_where, "expected a row array");
    if (row.size() != n)
      fail(row_where, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n) + " (matrix must be square)");
    for (std::size_t c = 0; c < n; ++c) entries.push_back(scalar_from_json(row[c], row_where + "/" + std::to_string(c)));
  }
  return MatrixQi(static_cast<int>(n), std::move(entries));
}

Json to_json(const MatrixQi& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = m.n();
  out["rows"] = std::move(rows);
  return out;
}

EntireFunction function_from_json(const Json& j) {
  if (!j.is_object()) fail("", "function must be a JSON object");
  const Json& type = field(j, "type", "");
  if (!type.is_string()) fail("/type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "polynomial") {
    reject_unknown_fields(j, {"type", "coeffs"}, "");
    return EntireFunction::polynomial(poly_from_json(field(j, "coeffs", ""), "/coeffs"));
  }
  if (t == "sin_family") {
    reject_unknown_fields(j, {"type", "a", "b", "c", "d"}, "");
    return EntireFunction::sin_family(scalar_from_json(field(j, "a", ""), "/a"), scalar_from_json(field(j, "b", ""), "/b"),
                                      scalar_from_json(field(j, "c", ""), "/c"), scalar_from_json(field(j, "d", ""), "/d"));
  }
  if (t == "exp_poly") {
    reject_unknown_fields(j, {"type", "v", "p_coeffs", "c", "d"}, "");
    return EntireFunction::exp_poly(scalar_from_json(field(j, "v", ""), "/v"), poly_from_json(field(j, "p_coeffs", ""), "/p_coeffs"),
                                    scalar_from_json(field(j, "c", ""), "/c"), scalar_from_json(field(j, "d", ""), "/d"));
  }
  fail("/type", "unknown function type \"" + t + "\"");
}

Json to_json(const EntireFunction& f) {
  Json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PolynomialFunction>) {
          out["type"] = "polynomial";
          out["coeffs"] = to_json(v.p);
        } else if constexpr (std::is_same_v<T, SinFamily>) {
          out["type"] = "sin_family";
          out["a"] = to_json(v.a);
          out["b"] = to_json(v.b);
          out["c"] = to_json(v.c);
          out["d"] = to_json(v.d);
        } else {
          out["type"] = "exp_poly";
          out["v"] = to_json(v.v);
          out["p_coeffs"] = to_json(v.p);
          out["c"] = to_json(v.c);
          out["d"] = to_json(v.d);
        }
      },
      f.variant());
  return out;
}

Json to_json(const RamificationProfile& p) {
  Json out;
  out["case"] = case_label(p.theorem_case);
  Json omitted = Json::array();
  for (const auto& v : p.omitted_values) omitted.push_back(to_json(v));
  out["omitted_values"] = std::move(omitted);
  Json trvs = Json::array();
  for (const auto& e : p.trv_entries) {
    Json entry;
    entry["value"] = to_json(e.value);
    entry["multiplicities"] = parts_json(e.multiplicities);
    if (!e.root_multiset.empty()) entry["root_multiplicities"] = parts_json(e.root_multiset);
    entry["infinitely_many_preimages"] = e.infinitely_many_preimages;
    trvs.push_back(std::move(entry));
  }
  out["totally_ramified_values"] = std::move(trvs);
  return out;
}

Json to_json(const RangeVerdict& v) {
  Json out;
  out["solvable"] = v.solvable;
  out["case"] = case_label(v.theorem_case);
  if (v.blocking) {
    Json b;
    b["value"] = to_json(v.blocking->value);
    b["reason"] = reason_label(v.blocking->reason);
    b["partition"] = parts_json(v.blocking->partition.parts);
    out["blocking"] = std::move(b);
  }
  if (v.cover_plan) {
    Json plan = Json::array();
    for (const auto& e : *v.cover_plan) {
      Json entry;
      entry["eigenvalue"] = to_json(e.eigenvalue);
      Json pre;
      if (e.preimage.root) pre["root"] = to_json(*e.preimage.root);
      pre["multiplicity"] = e.preimage.multiplicity;
      entry["preimage"] = std::move(pre);
      entry["K"] = e.block_size;
      entry["m"] = e.multiplicity;
      entry["parts"] = parts_json(e.parts);
      plan.push_back(std::move(entry));
    }
    out["cover_plan"] = std::move(plan);
  }
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

Json to_json(const RangeDescription& d) {
  Json out;
  out["case"] = case_label(d.theorem_case);
  out["n"] = d.n;
  Json omitted = Json::array();
  for (const auto& v : d.omitted_values) omitted.push_back(to_json(v));
  out["omitted_values"] = std::move(omitted);
  Json unc = Json::array();
  for (const auto& u : d.uncoverable) {
    Json entry;
    entry["value"] = to_json(u.value);
    Json parts = Json::array();
    for (const auto& p : u.partitions) parts.push_back(parts_json(p));
    entry["partitions"] = std::move(parts);
    unc.push_back(std::move(entry));
  }
  out["uncoverable"] = std::move(unc);
  return out;
}

Json to_json(const SegrePartition& s) {
  Json out;
  out["value"] = to_json(s.value);
  out["parts"] = parts_json(s.parts);
  return out;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  render_text_into(j, 0, os);
  return os.str();
}

}  // namespace mrange::io
