#include "morsetw/error.hpp"

namespace morsetw {

const char* errc_name(errc c) {
  switch (c) {
    case errc::MixedDimension: return "MixedDimension";
    case errc::DegenerateFace: return "DegenerateFace";
    case errc::DuplicateFace: return "DuplicateFace";
    case errc::NotDimension3: return "NotDimension3";
    case errc::TriangleInMoreThanTwoTetrahedra: return "TriangleInMoreThanTwoTetrahedra";
    case errc::TooLarge: return "TooLarge";
    case errc::InvalidInputDecomposition: return "InvalidInputDecomposition";
    case errc::InvalidDualDecomposition: return "InvalidDualDecomposition";
    case errc::NotAMatching: return "NotAMatching";
    case errc::ParityViolation: return "ParityViolation";
    case errc::InvalidDecomposition: return "InvalidDecomposition";
    case errc::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case errc::NotInComplex: return "NotInComplex";
    case errc::NotCodimensionOne: return "NotCodimensionOne";
    case errc::NotClosed3Manifold: return "NotClosed3Manifold";
    case errc::SpinePairsNotCycleFree: return "SpinePairsNotCycleFree";
    case errc::DisconnectedGamma: return "DisconnectedGamma";
    case errc::UnknownSentence: return "UnknownSentence";
    case errc::BudgetExceeded: return "BudgetExceeded";
    case errc::ParseError: return "ParseError";
    case errc::PreconditionViolated: return "PreconditionViolated";
  }
  return "UnknownError";
}

} // namespace morsetw
