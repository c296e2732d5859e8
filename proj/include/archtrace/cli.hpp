#pragma once

namespace archtrace::cli {

/// Entry point behind the archtrace binary.
/// Exit codes: 0 success, 1 pipeline error, 2 usage error.
int run(int argc, const char* const* argv);

} // namespace archtrace::cli
