#pragma once

#include <stdexcept>
#include <string>

namespace bpinn {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// configuration/usage problems, file I/O, domain violations on interpolated
// data, and numerical failures during a solve or a training run.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values produced while marching/training; message names the step.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical procedure failed its own consistency check (e.g. a non-monotone
// grid-refinement error sequence).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bpinn
