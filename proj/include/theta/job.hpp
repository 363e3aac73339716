#ifndef THETA_JOB_HPP
#define THETA_JOB_HPP

#include "theta/json_io.hpp"

namespace theta {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct RunResult {
  Json doc;
  int exit_code = 0;  // 0 ok, 1 malformed input, 2 domain error
};

// Executes one job document:
//   { "command": "...", "params": {...},
//     "ring": {"p": .., "f": ..}, "specialization": {...}? }
// The output carries {result, provenance}; failures carry {error,
// provenance} with the machine-readable error code.
RunResult run_job(const Json& job);

}  // namespace theta

#endif
