#pragma once

#include <ostream>

namespace plncsim::cli {

/// Entry point behind main(). argv[1] selects the subcommand (eval,
/// sweep-a, sweep-k, rank-prob, simulate); CSV goes to --output or
/// `out`, diagnostics and the simulate summary go to `err`. Returns the
/// process exit code: 0 on success, nonzero on usage or config errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace plncsim::cli
