#pragma once

#include <ostream>

namespace sscorpus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the sscorpus tool: build, eval, stats, ablate, subset.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sscorpus::cli
