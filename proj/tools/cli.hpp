#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torcol {

/// Exit codes: 0 success / SAT / valid, 1 UNSAT / invalid, 2 usage or format
/// error, 3 search budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torcol
