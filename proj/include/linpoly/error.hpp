#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linpoly {

enum class ErrorCode {
  NotPrime,
  NotIrreducible,
  DivisionByZero,
  ZeroElement,
  TooLarge,
  FieldMismatch,
  BothZero,
  ZeroPolynomial,
  NotSquarefree,
  BadInput,
  LeadingZero,
  NoInteriorTerm,
  EmbeddingUnavailable,
  NotAUnit,
  NotCoprime,
  NotARoot,
  NotCoprimeModZ,
  PrecisionTooLow,
  NotADivisor,
  BadArity,
  GuardExceeded,
  NoUsableSamples,
  Inseparable,
  NoCoprimePair,
  Parse,
  Internal,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Guard and precision failures are resource limits rather than bad input.
  bool is_guard() const noexcept {
    return code_ == ErrorCode::TooLarge || code_ == ErrorCode::GuardExceeded ||
           code_ == ErrorCode::PrecisionTooLow;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace linpoly
