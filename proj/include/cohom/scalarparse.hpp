#pragma once

#include "cohom/exactnum.hpp"

#include <string>
#include <string_view>

namespace cohom {

/**
 * Parse a scalar expression into an exact value.
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := integer | integer '/' integer | 'sqrt(' integer ')'
 *           | '(' expr ')' | '-' factor
 *
 * Errors carry the byte offset of the offending token.
 */
AlgNum parse_scalar(std::string_view text);

/// Canonical text form; parse_scalar(format_scalar(x)) == x.
std::string format_scalar(const AlgNum& x);

} // namespace cohom
