#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kuechle {

enum class ErrorCode {
  // invalid input
  ParseError,
  NotPrime,
  FieldMismatch,
  DivisionByZero,
  ZeroVector,
  ZeroForm,
  NotSkew,
  ShapeMismatch,
  AmbientMismatch,
  DegenerateForm,
  NotAPencil,
  NotSmooth,
  NoNondegenerateMember,
  NotLagrangian,
  BadDimension,
  LineNotInKernel,
  TooLarge,
  DegenerateQuadric,
  BadCharacteristic,
  NotOnY,
  NotSymmetric,
  RingMismatch,
  DegreeMismatch,
  BadCodim,
  // violated mathematical invariants
  RankNotThree,
  Unclassifiable,
  NoAnnihilator,
  NotUnique,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal bad caller input rather than a broken invariant.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kuechle
