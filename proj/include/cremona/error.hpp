#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorKind {
  DivisionByZero,
  DegenerateConfiguration,
  BasePointEvaluation,
  CollapsedMap,
  NotSimplified,
  NonRationalBasePoint,
  NotHomaloidal,
  NotDeJonquieres,
  FactorizationFailed,
  ProofGapDetected,
  NotIdentityInput,
  BudgetExceeded,
  DecompositionStuck,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure is reported through this one exception type; `kind`
// is the stable machine-readable name, `what()` carries the payload.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace cremona
