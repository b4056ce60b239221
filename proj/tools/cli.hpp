#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace forcealg::cli {

/// Runs one CLI invocation. Reports go to `out` as single-line JSON (fixed
/// key order, timing_ms last); diagnostics go to `err` as JSON. Returns the
/// process exit code: 0 success, 2 input error, 3 degree-cap abort.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace forcealg::cli
