#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "arfc/curve.hpp"
#include "arfc/io/curve_file.hpp"
#include "arfc/io/poly_io.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(ARFC_DATA_DIR) + "/" + name; }

inline arfc::Polynomial poly(const std::string& src, const std::string& var = "t") {
  return arfc::io::parse_poly(src, var);
}

inline arfc::SeriesFraction frac(const std::string& num, const std::string& den, const std::string& var = "t") {
  return arfc::SeriesFraction(poly(num, var)) / arfc::SeriesFraction(poly(den, var));
}

/// Rows of expressions in the default variables t, u, v, w.
inline arfc::Parametrization curve(std::initializer_list<std::vector<std::string>> rows) {
  arfc::Parametrization p;
  for (const auto& row : rows) {
    p.n = row.size();
    const auto vars = arfc::io::default_vars(row.size());
    std::vector<arfc::SeriesFraction> coords;
    for (std::size_t i = 0; i < row.size(); ++i) coords.emplace_back(poly(row[i], vars[i]));
    p.generators.emplace_back(std::move(coords));
  }
  return p;
}

inline arfc::Parametrization e1() { return curve({{"t^5 + t^10", "u^7"}, {"t^8", "u^11 + u^13"}}); }

inline arfc::Parametrization e2() {
  return curve({{"t^5 - t^8", "u^2 + u^6", "v^3", "w^2 + w^9"}, {"t^6", "u^2 + u^7 + u^10", "v^7 - v^9", "w^2 + w^7"}});
}

inline arfc::Parametrization e3() {
  return curve({{"t^3 + t^4", "u^3 + u^7"},
                {"t^8 + t^9", "u^8"},
                {"t^12 + t^15", "u^13 + u^14"},
                {"t^21", "u^17 + u^19"}});
}

inline arfc::Parametrization e4_truncated() {
  return curve({{"t^5", "u^2 + u^6", "v^3", "w^2"}, {"t^6", "u^2 + u^7", "v^7", "w^2 + w^7"}});
}

inline std::vector<std::pair<std::string, arfc::Parametrization>> all() {
  return {{"two branches", e1()}, {"four branches", e2()}, {"discrepancy", e3()}, {"truncated", e4_truncated()}};
}

}  // namespace fixtures
