#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gci/polynomial.hpp"

namespace gci {

struct ParseOptions {
    Field field = Field::rationals();
    // Per-factor permission for "^-k" exponents; empty means none.
    std::vector<bool> laurent;
    // Extra identifiers that expand to previously built polynomials.
    const std::map<std::string, MultiPoly>* named = nullptr;
};

// Grammar (whitespace insignificant, unary minus at the head of an expr):
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := coeff | var ("^" int)? | "(" expr ")"
//   coeff  := int ("/" posint)?
// Homogeneity is validated against the declared degrees.
MultiPoly parse_poly(std::string_view text, const AmbientPtr& ambient, const std::vector<int>& degrees,
                     const ParseOptions& opts = {});

// Declared degrees taken from the first term; "0" is rejected since its
// degree cannot be inferred.
MultiPoly parse_poly_infer(std::string_view text, const AmbientPtr& ambient, const ParseOptions& opts = {});

}  // namespace gci
