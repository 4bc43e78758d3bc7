#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcx {

/// Base class for every error raised by the library. `kind()` is a stable
/// identifier used in the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error("DivisionByZero", what) {}
};

/// Raised when inverting a zero divisor (alpha == 0 or beta == 0).
class NullConeError : public Error {
 public:
  explicit NullConeError(const std::string& what) : Error("NullCone", what) {}
};

class NotNilpotent : public Error {
 public:
  explicit NotNilpotent(const std::string& what) : Error("NotNilpotent", what) {}
};

class NotInClass : public Error {
 public:
  explicit NotInClass(const std::string& what) : Error("NotInClass", what) {}
};

class NotRealValued : public Error {
 public:
  explicit NotRealValued(const std::string& what) : Error("NotRealValued", what) {}
};

class NotHyperbolicValued : public Error {
 public:
  explicit NotHyperbolicValued(const std::string& what)
      : Error("NotHyperbolicValued", what) {}
};

class WrongVariables : public Error {
 public:
  explicit WrongVariables(const std::string& what) : Error("WrongVariables", what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

/// A kernel or harmonicity requirement of a decomposition failed.
/// `condition()` names the first failed requirement, e.g. "dZdagger F = 0".
class PreconditionViolation : public Error {
 public:
  PreconditionViolation(std::string condition, const std::string& what)
      : Error("PreconditionViolation", what), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed JSON input; the message starts with a JSON path such as `$.plus[2][4]`.
class JsonFormatError : public Error {
 public:
  JsonFormatError(std::string path, const std::string& what)
      : Error("JsonFormatError", path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace bcx
