#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class OddOrder : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class NotAMatching : public Error {
 public:
  using Error::Error;
};

class NoOneFactor : public Error {
 public:
  using Error::Error;
};

/// Raised when an extendability search exceeds its pair cap or deadline.
class WorkBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Parse errors carry their position so diagnostics can point at the input.

class MalformedGraph6 : public Error {
 public:
  MalformedGraph6(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SelfLoop : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateEdge : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace matchext
