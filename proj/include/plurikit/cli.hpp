#pragma once

namespace plurikit {

/// Parses argv, runs the requested pipeline, writes CSV plus a JSON run
/// manifest. Returns the process exit code: 0 success, 2 input error,
/// 3 numerical-guard abort.
int run_cli(int argc, const char* const* argv);

}  // namespace plurikit
