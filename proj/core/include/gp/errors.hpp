#pragma once

#include <stdexcept>

namespace gp {

// Malformed input: unknown vertex ids, unreadable files, inconsistent options.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested construction exceeds the configured size cap (GP_MAX_VERTICES).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative routine terminated without meeting its accuracy contract, or a
// proven-positive quantity came out nonpositive.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gp
