#ifndef SPLATSLAM_ERRORS_HPP
#define SPLATSLAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace splatslam {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDepth : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyFrame : public Error {
 public:
  using Error::Error;
};

class EmptyNeighborhood : public Error {
 public:
  using Error::Error;
};

/// A gradient or loss evaluated to NaN/Inf (degenerate configuration).
class NonFinite : public Error {
 public:
  using Error::Error;
};

class MissingIndexFile : public Error {
 public:
  using Error::Error;
};

class NoAssociations : public Error {
 public:
  using Error::Error;
};

class CorruptFile : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace splatslam

#endif  // SPLATSLAM_ERRORS_HPP
