#pragma once

#include <stdexcept>

namespace fermisea {

// Thrown when a numerical safety bound is exceeded (runaway enumeration,
// truncation boxes too large, or a closed form failing an exactness check).
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fermisea
