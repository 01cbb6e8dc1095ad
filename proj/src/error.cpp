#include "kuechle/error.hpp"

namespace kuechle {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotAPencil: return "NotAPencil";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::NoNondegenerateMember: return "NoNondegenerateMember";
    case ErrorCode::NotLagrangian: return "NotLagrangian";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::LineNotInKernel: return "LineNotInKernel";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateQuadric: return "DegenerateQuadric";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::NotOnY: return "NotOnY";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BadCodim: return "BadCodim";
    case ErrorCode::RankNotThree: return "RankNotThree";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::NoAnnihilator: return "NoAnnihilator";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RankNotThree:
    case ErrorCode::Unclassifiable:
    case ErrorCode::NoAnnihilator:
    case ErrorCode::NotUnique:
    case ErrorCode::InvariantViolation:
      return false;
    default:
      return true;
  }
}

}  // namespace kuechle
