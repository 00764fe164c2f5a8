#include "cremona/error.hpp"

namespace cremona {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::BasePointEvaluation: return "BasePointEvaluation";
    case ErrorKind::CollapsedMap: return "CollapsedMap";
    case ErrorKind::NotSimplified: return "NotSimplified";
    case ErrorKind::NonRationalBasePoint: return "NonRationalBasePoint";
    case ErrorKind::NotHomaloidal: return "NotHomaloidal";
    case ErrorKind::NotDeJonquieres: return "NotDeJonquieres";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
    case ErrorKind::ProofGapDetected: return "ProofGapDetected";
    case ErrorKind::NotIdentityInput: return "NotIdentityInput";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DecompositionStuck: return "DecompositionStuck";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cremona
