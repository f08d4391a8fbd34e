#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgf {

enum class Errc {
  EmptyInput,
  NotNumerical,
  GeneratorTooLarge,
  TableTooLarge,
  InvalidAperyBase,
  NotPseudoFrobenius,
  InvalidRFMatrix,
  RFMatrixLimitExceeded,
  FactorizationBudgetExceeded,
  CompletionBudgetExceeded,
  BoundTooSmall,
  EmbeddingDimensionTooSmall,
  NotWitness,
  NotEquidegree,
  InvalidPresentation,
  ParseError,
  TheoremViolation,
};

enum class ErrorClass { Input, Budget, Internal };

const char* to_string(Errc code) noexcept;
ErrorClass classify(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised when the witnesses found up to a degree bound fail to generate the
// toric ideal. `degree()` is the least degree where a generator is missing.
class BoundTooSmall : public Error {
 public:
  BoundTooSmall(std::int64_t bound, std::int64_t degree);

  std::int64_t bound() const noexcept { return bound_; }
  std::int64_t degree() const noexcept { return degree_; }

 private:
  std::int64_t bound_;
  std::int64_t degree_;
};

}  // namespace sgf
