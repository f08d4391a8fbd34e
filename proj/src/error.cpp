#include "sgf/error.hpp"

namespace sgf {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotNumerical: return "NotNumerical";
    case Errc::GeneratorTooLarge: return "GeneratorTooLarge";
    case Errc::TableTooLarge: return "TableTooLarge";
    case Errc::InvalidAperyBase: return "InvalidAperyBase";
    case Errc::NotPseudoFrobenius: return "NotPseudoFrobenius";
    case Errc::InvalidRFMatrix: return "InvalidRFMatrix";
    case Errc::RFMatrixLimitExceeded: return "RFMatrixLimitExceeded";
    case Errc::FactorizationBudgetExceeded: return "FactorizationBudgetExceeded";
    case Errc::CompletionBudgetExceeded: return "CompletionBudgetExceeded";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::EmbeddingDimensionTooSmall: return "EmbeddingDimensionTooSmall";
    case Errc::NotWitness: return "NotWitness";
    case Errc::NotEquidegree: return "NotEquidegree";
    case Errc::InvalidPresentation: return "InvalidPresentation";
    case Errc::ParseError: return "ParseError";
    case Errc::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

ErrorClass classify(Errc code) noexcept {
  switch (code) {
    case Errc::TableTooLarge:
    case Errc::RFMatrixLimitExceeded:
    case Errc::FactorizationBudgetExceeded:
    case Errc::CompletionBudgetExceeded:
    case Errc::BoundTooSmall:
      return ErrorClass::Budget;
    case Errc::TheoremViolation:
      return ErrorClass::Internal;
    default:
      return ErrorClass::Input;
  }
}

BoundTooSmall::BoundTooSmall(std::int64_t bound, std::int64_t degree)
    : Error(Errc::BoundTooSmall,
            "degree bound " + std::to_string(bound) +
                " too small: minimal generators missing in degree " + std::to_string(degree)),
      bound_(bound),
      degree_(degree) {}

}  // namespace sgf
