#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptm::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success or pass, 1 divergence or failed check, 2 usage or
/// parse error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptm::cli
