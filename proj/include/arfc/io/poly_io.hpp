#pragma once

#include <string>
#include <string_view>

#include "arfc/algebra.hpp"

namespace arfc::io {

/// expr := ['-'] term (('+'|'-') term)*
/// term := coeff ['*' atom] | atom
/// atom := var ['^' nat]
/// coeff := int ['/' posint]
/// Throws ParseError (with line:col) or WrongVariable.
Polynomial parse_poly(std::string_view src, std::string_view var);

/// Inverse of parse_poly on canonical polynomials, ascending exponents.
std::string serialize_poly(const Polynomial& p, std::string_view var);

std::string serialize_fraction(const SeriesFraction& f, std::string_view var);

}  // namespace arfc::io
