#pragma once

#include <stdexcept>
#include <string>

namespace canopy {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rotation decomposition requested at |pitch| = pi/2.
class GimbalLockError : public Error {
 public:
  using Error::Error;
};

/// Field/scenario parameters violate a structural constraint.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// Map operation requested on a map without any valid cell.
class EmptyMapError : public Error {
 public:
  using Error::Error;
};

/// Local/global map overlap below the alignment floor.
class InsufficientOverlapError : public Error {
 public:
  using Error::Error;
};

/// Trajectory or map comparison has no associable samples.
class NoOverlapError : public Error {
 public:
  using Error::Error;
};

/// Trajectory shorter than the requested relative-error delta.
class PathTooShortError : public Error {
 public:
  using Error::Error;
};

/// Scenario file failed to parse or validate. Carries line/field context.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, int line, std::string field)
      : Error(format(what, line, field)), line_(line), field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(const std::string& what, int line, const std::string& field) {
    std::string msg = "scenario schema error";
    if (line > 0) msg += " at line " + std::to_string(line);
    if (!field.empty()) msg += " (field '" + field + "')";
    return msg + ": " + what;
  }
  int line_;
  std::string field_;
};

/// A required run artifact is absent.
class MissingArtifactError : public Error {
 public:
  explicit MissingArtifactError(const std::string& path) : Error("missing artifact: " + path) {}
};

/// Export requested for a layer that does not exist.
class UnknownLayerError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure while reading or writing artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace canopy
