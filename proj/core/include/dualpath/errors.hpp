#pragma once

#include <stdexcept>
#include <string>

namespace dualpath {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// File or stream level problems: missing files, malformed headers, bad encodings.
class IoError : public Error {
  using Error::Error;
};

// Structural violations: out-of-range indices, non-monotone index lists,
// dimension mismatches, out-of-range config values.
class ValidationError : public Error {
  using Error::Error;
};

// A 3D mask has zero visibility in every candidate frame.
class NoVisibleFrameError : public Error {
  using Error::Error;
};

// A mask bounding box cannot be projected into the requested frame.
class NoProjectionError : public Error {
  using Error::Error;
};

// Feature averaging collapsed to a numerically zero vector.
class ZeroVectorError : public Error {
  using Error::Error;
};

}  // namespace dualpath
