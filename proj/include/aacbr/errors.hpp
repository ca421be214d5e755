#pragma once

#include <stdexcept>
#include <string>

namespace aacbr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A case (or queried characterisation) is not above the default characterisation.
class RegularityViolation : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration or expansion would exceed its configured bound.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad JSON, duplicate features, unknown outcome labels, ...
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace aacbr
