#pragma once

#include <stdexcept>

namespace balseg {

// A verified internal identity failed to hold. This signals a bug in the
// library (or a miscomputed table), never bad user input.
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace balseg
