#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cst {

/// Runs one command line (args[0] is the program name). Exit codes: 0 ok,
/// 1 invalid input, 2 method inapplicable, 3 internal invariant violation;
/// failures print a JSON object to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cst
