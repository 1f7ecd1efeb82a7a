#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgmf {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by malformed user input (grammar, schema, shapes).
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& msg, std::size_t position)
      : InputError(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public InputError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : InputError("unknown variable '" + name + "' at position " +
                   std::to_string(position)),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DivisionInCoefficient : public InputError {
 public:
  using InputError::InputError;
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class ShapeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class WrongLength : public InputError {
 public:
  using InputError::InputError;
};

// Carries the printed remainder of the failed division.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(std::string remainder)
      : Error("not divisible, remainder " + remainder),
        remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

class NotInImage : public Error {
 public:
  NotInImage(std::size_t column, std::string residual)
      : Error("column " + std::to_string(column) +
              " not in image, residual " + residual),
        column_(column),
        residual_(std::move(residual)) {}
  std::size_t column() const { return column_; }
  const std::string& residual() const { return residual_; }

 private:
  std::size_t column_;
  std::string residual_;
};

class NotUnimodular : public Error {
 public:
  explicit NotUnimodular(std::string det)
      : Error("matrix not unimodular, det = " + det), det_(std::move(det)) {}
  const std::string& determinant() const { return det_; }

 private:
  std::string det_;
};

class NotPerfectPairing : public Error {
 public:
  using Error::Error;
};

class LiftFailed : public Error {
 public:
  using Error::Error;
};

class NotAChainMap : public Error {
 public:
  using Error::Error;
};

class SplitNotAligned : public Error {
 public:
  using Error::Error;
};

class ChainMapCheckFailed : public Error {
 public:
  using Error::Error;
};

class NoDecomposition : public Error {
 public:
  using Error::Error;
};

class InternalCheckFailed : public Error {
 public:
  using Error::Error;
};

class RNotUnit : public Error {
 public:
  using Error::Error;
};

class ComplexCheckFailed : public Error {
 public:
  using Error::Error;
};

class IdentityFailed : public Error {
 public:
  using Error::Error;
};

class PrecheckFailed : public Error {
 public:
  using Error::Error;
};

class SolverGaveUp : public Error {
 public:
  SolverGaveUp(const std::string& msg, std::string report)
      : Error(msg), report_(std::move(report)) {}
  const std::string& report() const { return report_; }

 private:
  std::string report_;
};

class CharTwoNeedsTables : public Error {
 public:
  using Error::Error;
};

}  // namespace dgmf
