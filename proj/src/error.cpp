#include "error.hpp"

namespace qe {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::WeightsInvalid: return "WeightsInvalid";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FactorizationBoundExceeded: return "FactorizationBoundExceeded";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotSmoothGenericFiber: return "NotSmoothGenericFiber";
    case ErrorKind::ZeroSocleGenerator: return "ZeroSocleGenerator";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::OddRankPrimitive: return "OddRankPrimitive";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

ErrorCategory error_category(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::InvalidArgument:
    case ErrorKind::MixedFields:
    case ErrorKind::WeightsInvalid:
      return ErrorCategory::User;
    case ErrorKind::OddRankPrimitive:
    case ErrorKind::Internal:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Math;
  }
}

}  // namespace qe
