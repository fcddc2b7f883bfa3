#pragma once

#include <stdexcept>
#include <string>

namespace aksch {

/// Bad input: malformed parameters, mismatched shapes, nodes outside a diagram.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested computation is only defined in a regime the inputs are not in
/// (e.g. a decomposition matrix outside the finite regime).
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The chosen modular system does not separate a contributing pair of nodes.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cache or file-system failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aksch
