#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thvg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration, sweep specification or other caller-supplied
/// parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A record or graph violates a domain invariant (duplicate id, bad rating,
/// self-loop where none is allowed, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `line()` is 1-based, or 0 when the error is not
/// tied to a single line (JSON documents).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace thvg
