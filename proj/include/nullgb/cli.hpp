#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nullgb {

/// Exit codes: 0 verdict computed (or yes), 1 verdict no / hypotheses unmet,
/// 2 inapplicable (Condition (D) fails), 3 parse or usage error, 4 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nullgb
