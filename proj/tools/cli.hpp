#pragma once

#include <iosfwd>

namespace hyperdirichlet::cli {

/// Parses argv and runs one subcommand. Tables go to --output (stdout when
/// absent or "-"); failures print a JSON error record to `err`.
/// Returns 0 on success, 1 on a computation failure, 2 on bad usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperdirichlet::cli
