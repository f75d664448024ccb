#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxroots {

// Base for every error the library reports. Callers that only care about
// "something was wrong with the input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an approximate value is too close to zero to be signed.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// A search or enumeration hit its configured state cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace coxroots
