#pragma once

#include <iosfwd>

namespace uavvlc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

/// Environment variable naming the default output root.
inline constexpr const char* kOutputRootEnv = "UAVVLC_OUT_ROOT";

/// Batch entry point: parse flags and config, run the experiment, write
/// artifacts. Returns one of the exit codes above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace uavvlc::cli
