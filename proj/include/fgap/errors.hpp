#pragma once

#include <stdexcept>
#include <string>

namespace fgap {

// Validation-class failures (bad arguments, unsatisfiable preconditions).
// The CLI maps these to exit code 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed an integer/memory size contract.
struct size_error : input_error {
  using input_error::input_error;
};

// Numerical precondition violated (e.g. non-unit covector, coincident points).
struct precondition_error : input_error {
  using input_error::input_error;
};

// Grid too coarse for the requested oscillatory quadrature.
struct resolution_error : input_error {
  using input_error::input_error;
};

// A set failed a regularity requirement an algorithm depends on.
struct regularity_violation : input_error {
  using input_error::input_error;
};

// Work or node budget exceeded. The CLI maps these to exit code 3.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A geometric solver produced an inconsistent configuration.
struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fgap
