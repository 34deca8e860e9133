#pragma once

#include <folab/unipoly.hpp>

#include <map>
#include <string>
#include <string_view>

namespace folab {

// Name environment for expression evaluation; generator names of the target
// field are always available implicitly.
using ExprEnv = std::map<std::string, FieldElement>;

// Textual polynomial/expression grammar: integer and rational literals
// ("3", "5/8"), `+ - * ^ ( )`, generator names, juxtaposition as
// multiplication ("54p^3", "3/80pq^5"). `/` occurs only inside rational
// literals. Throws ValidationError on malformed input.
FieldElement parse_element(const FieldPtr& field, std::string_view text,
                           const ExprEnv& env = {});

// Same grammar with one distinguished indeterminate `var`.
UniPoly parse_unipoly(const FieldPtr& field, std::string_view text, const std::string& var,
                      const ExprEnv& env = {});

}  // namespace folab
