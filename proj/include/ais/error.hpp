#pragma once

#include <stdexcept>
#include <string>

namespace ais {

// Base class for all structured errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or inconsistent configuration / arguments (CLI exit code 1).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Failure during sampling, e.g. non-finite energies (CLI exit code 2).
class SamplerError : public Error {
 public:
  explicit SamplerError(const std::string& msg) : Error(msg) {}
};

// Filesystem / serialization failure (CLI exit code 3).
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace ais
