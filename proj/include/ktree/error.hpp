#pragma once

#include <stdexcept>
#include <string>

namespace ktree {

// Malformed input: bad arguments, schema violations, broken preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical property the caller asked for does not hold
// (no stable quiver exists, reflection hits a simple summand, ...).
class PropertyViolation : public std::runtime_error {
 public:
  explicit PropertyViolation(const std::string& what) : std::runtime_error(what) {}
};

// Schema error while reading JSON; `path` points at the offending field.
class SchemaError : public InvalidInput {
 public:
  SchemaError(std::string path, const std::string& msg)
      : InvalidInput(path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace ktree
