#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qe {

enum class ErrorKind {
  // user errors (bad input text, invalid flags)
  SyntaxError,
  UnknownVariable,
  InvalidArgument,
  MixedFields,
  WeightsInvalid,
  // mathematical preconditions
  DivisionByZero,
  FactorizationBoundExceeded,
  ZeroInput,
  ZeroPolynomial,
  ZeroScalar,
  ZeroEntry,
  NotHomogeneous,
  BadCharacteristic,
  CharacteristicTwo,
  NotFiniteDimensional,
  NotSmooth,
  NotSmoothGenericFiber,
  ZeroSocleGenerator,
  DegenerateForm,
  UnsupportedField,
  // internal invariant breaches
  OddRankPrimitive,
  Internal,
};

enum class ErrorCategory { User = 1, Math = 2, Internal = 3 };

std::string_view error_kind_name(ErrorKind kind) noexcept;
ErrorCategory error_category(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              "syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace qe
