#pragma once

#include <stdexcept>
#include <string>

namespace gersh {

// Failure categories. InputError covers malformed or out-of-contract arguments;
// NumericalError covers computations that could not reach their accuracy
// contract (non-convergence, contour on the spectrum, step underflow...).
enum class ErrorKind {
  kInput,
  kNumerical,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::kInput, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorKind::kNumerical, what) {}
};

}  // namespace gersh
