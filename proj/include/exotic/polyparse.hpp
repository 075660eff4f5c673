#pragma once

#include <string_view>

#include "exotic/polyring.hpp"

namespace exotic {

// Parses "3/2*x^2*y - 1"-style input: + - * / ^, parentheses, integer
// literals. Division by a non-constant is exact division.
Polynomial parse_polynomial(std::string_view text, const VarSet& vars);

// Variables are taken in order of first appearance.
Polynomial parse_polynomial(std::string_view text);

}  // namespace exotic
