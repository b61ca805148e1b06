#pragma once

#include <string_view>

#include "qseries/expr.hpp"

namespace qseries {

/// Parses the series expression language:
///
///     expr   := term (("+" | "-") term)*
///     term   := factor ("*" factor)*
///     factor := atom ("^" integer)?
///     atom   := "P(" a "," b "," e ")" | "Pneg(" a "," b "," e ")"
///             | "phi(" t ")" | "psi(" t ")" | "q^" t | integer
///             | "inv(" expr ")" | "sub(" expr "," t ")"
///             | "dissect(" expr "," t "," r ")" | "mod(" expr "," m ")"
///             | "$" name | "(" expr ")"
///
/// P(a,b,e) is (q^a; q^b)_inf^e and Pneg(a,b,e) is (-q^a; q^b)_inf^e.
/// Whitespace is ignored between tokens. Throws ParseError carrying the
/// 1-based position of the offending character (length + 1 at end of input).
ExprPtr parse_expr(std::string_view text);

} // namespace qseries
