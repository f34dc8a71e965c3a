#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankagg {

// Base class for every error raised by the library. The CLI maps these to
// exit status 1 with the message as the one-line reason.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two objects that must share a candidate count do not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size bound (enumeration, DP table, voter count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A scoring system or experiment configuration is incomplete or inconsistent.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rankagg
