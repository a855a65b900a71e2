#pragma once

#include <stdexcept>

namespace qparl {

// Error classes map onto the CLI exit codes: ConfigError -> 1,
// NumericError -> 2, IoError -> 3.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qparl
