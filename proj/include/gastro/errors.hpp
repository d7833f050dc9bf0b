#pragma once

#include <stdexcept>
#include <string>

namespace gastro {

/// Bad or inconsistent configuration / input files. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No dose in [0, d_max] can satisfy the acid ceiling. CLI exit code 3.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integration failure, invariant violation, or iteration-cap hit. CLI exit code 4.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gastro
