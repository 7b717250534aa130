#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arfc/curve.hpp"

namespace arfc::io {

struct CurveInput {
  std::vector<std::string> vars;
  Parametrization curve;  // normalized
};

/// {"branches": n, "vars": [...], "generators": [["expr", ...], ...]}
/// Throws SchemaError, ParseError, WrongVariable, EmptyRing.
CurveInput parse_curve_json(const nlohmann::json& doc);
CurveInput parse_curve_text(std::string_view text);
CurveInput parse_curve_file(const std::filesystem::path& path);

/// Default variable names: t, u, v, w, then t5, t6, ...
std::vector<std::string> default_vars(std::size_t n);

}  // namespace arfc::io
