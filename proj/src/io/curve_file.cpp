#include "arfc/io/curve_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "arfc/errors.hpp"
#include "arfc/io/poly_io.hpp"

namespace arfc::io {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::vector<std::string> default_vars(std::size_t n) {
  static const char* names[] = {"t", "u", "v", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 4 ? names[i] : "t" + std::to_string(i + 1));
  return out;
}

CurveInput parse_curve_json(const nlohmann::json& doc) {
  if (!doc.is_object()) schema("top level must be an object");
  for (const char* key : {"branches", "vars", "generators"}) {
    if (!doc.contains(key)) schema(std::string("missing key \"") + key + "\"");
  }
  const auto& jn = doc["branches"];
  if (!jn.is_number_unsigned() || jn.get<std::size_t>() == 0) schema("\"branches\" must be a positive integer");
  const std::size_t n = jn.get<std::size_t>();

  const auto& jv = doc["vars"];
  if (!jv.is_array() || jv.size() != n) schema("\"vars\" must be an array of " + std::to_string(n) + " names");
  CurveInput out;
  std::set<std::string> seen;
  for (const auto& v : jv) {
    if (!v.is_string() || !is_identifier(v.get<std::string>())) schema("variable names must be identifiers");
    if (!seen.insert(v.get<std::string>()).second) schema("duplicate variable \"" + v.get<std::string>() + "\"");
    out.vars.push_back(v.get<std::string>());
  }

  const auto& jg = doc["generators"];
  if (!jg.is_array() || jg.empty()) schema("\"generators\" must be a nonempty array");
  Parametrization p{n, {}};
  for (std::size_t r = 0; r < jg.size(); ++r) {
    const auto& row = jg[r];
    if (!row.is_array() || row.size() != n) {
      schema("generator " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    }
    std::vector<SeriesFraction> coords;
    for (std::size_t i = 0; i < n; ++i) {
      if (!row[i].is_string()) schema("generator " + std::to_string(r + 1) + " entry " + std::to_string(i + 1) + " must be a string");
      try {
        coords.emplace_back(parse_poly(row[i].get<std::string>(), out.vars[i]));
      } catch (const Error& e) {
        throw Error(e.code(), "generator " + std::to_string(r + 1) + ", branch " + std::to_string(i + 1) + ": " +
                                  e.detail());
      }
    }
    p.generators.emplace_back(std::move(coords));
  }
  out.curve = normalize(p);
  return out;
}

CurveInput parse_curve_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "invalid JSON at byte " + std::to_string(e.byte));
  }
  return parse_curve_json(doc);
}

CurveInput parse_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_text(ss.str());
}

}  // namespace arfc::io
