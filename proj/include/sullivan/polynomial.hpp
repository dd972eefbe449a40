#pragma once

#include <string_view>

#include "sullivan/cdga.hpp"

namespace sullivan {

/// Parses the document polynomial grammar
///
///     poly   := ['-'] term (('+' | '-') term)*
///     term   := coef | [coef '*'] factor ('*' factor)*
///     factor := name ['^' digits]
///     coef   := digits ['/' digits]
///
/// over the given generators. Spaces are ignored. Products are formed in the order
/// written, so `n*x` and `x*n` agree and `q*p = -p*q` for odd p, q.
AlgebraElement parse_element(const GeneratorsPtr& gens, std::string_view text);

}  // namespace sullivan
