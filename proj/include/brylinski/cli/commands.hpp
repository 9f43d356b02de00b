#pragma once

// The `brylinski` command line: invariants, beta-eval, residues and verify.

#include <ostream>

namespace brylinski::cli {

/// Runs one command. Tables go to `out`, diagnostics to `err`; the return value is the process
/// exit status (0 success, 2 parse, 3 pole proximity, 4 usage or domain, 5 verification failure).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace brylinski::cli
