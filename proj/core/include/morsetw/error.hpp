#pragma once

#include <stdexcept>
#include <string>

namespace morsetw {

enum class errc {
  MixedDimension,
  DegenerateFace,
  DuplicateFace,
  NotDimension3,
  TriangleInMoreThanTwoTetrahedra,
  TooLarge,
  InvalidInputDecomposition,
  InvalidDualDecomposition,
  NotAMatching,
  ParityViolation,
  InvalidDecomposition,
  WitnessVerificationFailed,
  NotInComplex,
  NotCodimensionOne,
  NotClosed3Manifold,
  SpinePairsNotCycleFree,
  DisconnectedGamma,
  UnknownSentence,
  BudgetExceeded,
  ParseError,
  PreconditionViolated,
};

const char* errc_name(errc c);

// Single exception type for the whole library; code() tells callers which
// failure class they hit, what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw Error(code, message); }

} // namespace morsetw
