#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohom::cli {

/**
 * Entry point of the `cohom` tool. `args` excludes the program name.
 *
 * Exit codes: 0 ok, 1 internal, 2 parse/usage, 3 invalid diagram,
 * 4 rank defect or parity conflict, 5 identically-zero violation,
 * 6 verification failure.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cohom::cli
