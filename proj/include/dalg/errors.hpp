#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dalg {

/// Whether an error stems from malformed input or from a violated
/// mathematical precondition. The CLI maps these to exit codes 1 and 2.
enum class ErrorKind { Input, Math };

/// Base class of every error raised by the library. `reason()` is a stable
/// machine-readable tag such as "ConstantDivisor".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string reason, const std::string& message)
      : std::runtime_error(message), kind_(kind), reason_(std::move(reason)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorKind kind_;
  std::string reason_;
};

class InputError : public Error {
 public:
  InputError(std::string reason, const std::string& message)
      : Error(ErrorKind::Input, std::move(reason), message) {}
};

class MathError : public Error {
 public:
  MathError(std::string reason, const std::string& message)
      : Error(ErrorKind::Math, std::move(reason), message) {}
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : InputError("SyntaxError", "at position " + std::to_string(position) +
                                      ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownIndeterminate : public InputError {
 public:
  explicit UnknownIndeterminate(std::string name)
      : InputError("UnknownIndeterminate", "undeclared indeterminate '" + name + "'"),
        name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ExponentOutOfRange : public InputError {
 public:
  explicit ExponentOutOfRange(std::size_t position)
      : InputError("ExponentOutOfRange",
                   "at position " + std::to_string(position) +
                       ": exponent does not fit a machine word") {}
};

class MissingAssignment : public InputError {
 public:
  explicit MissingAssignment(const std::string& var)
      : InputError("MissingAssignment", "no value assigned to " + var) {}
};

/// Malformed structured document (certificate or witness).
class DocumentError : public InputError {
 public:
  explicit DocumentError(const std::string& message)
      : InputError("DocumentError", message) {}
};

inline MathError zero_polynomial(std::string_view what) {
  return MathError("ZeroPolynomial", std::string(what) + " is the zero polynomial");
}

inline MathError constant_polynomial(std::string_view what) {
  return MathError("ConstantPolynomial",
                   std::string(what) + " is free of the main indeterminate");
}

}  // namespace dalg
