#ifndef MONSCHED_ERRORS_HPP
#define MONSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monsched {

// Bad user input: unknown ids, malformed files, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A labeling or configuration that violates its structural constraints.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// Exhaustive search refused because the space exceeds the configured limit.
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monsched

#endif  // MONSCHED_ERRORS_HPP
