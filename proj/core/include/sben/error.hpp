#pragma once

#include <stdexcept>
#include <string>

namespace sben {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two fields that must share a grid do not.
class IncompatibleFields : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration or invalid model parameters.
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  explicit ConfigError(const std::string& what) : Error(what) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Iterative solve failure, stability violation, loss of positivity, or a
/// right-hand side outside the range of an operator.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sben
