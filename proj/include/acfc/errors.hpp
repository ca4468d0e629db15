#pragma once

#include <stdexcept>
#include <string>

namespace acfc {

/// Bad parameter passed to a constructor or operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Binary algebra operation on functions restricted to different sets.
class SetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rule that cannot provide the requested exact information (e.g. a
/// one-sided limit of an opaque callable).
class UnsupportedRule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acfc
