#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flab {

enum class ErrorCode {
  // fpgroup
  InvalidPresentation,
  ParseError,
  ShadowNotCommutator,
  BadDeficiency,
  AlphabetClash,
  ArithmeticOverflow,
  DimensionMismatch,
  InexactDivision,
  // knotforge
  NotCoprime,
  DegenerateParameters,
  UnknownSpec,
  InvalidKnot,
  MissingMonodromy,
  // fourfold
  MissingBundleData,
  GenusMismatch,
  NonzeroSquare,
  MissingImages,
  AbelianizationBlocked,
  UnknownSurface,
  RelatorNotFound,
  InvalidGluing,
  InconsistentModel,
  // swenum
  UnboundedRegion,
  NoCharacteristicVector,
  OddOrNegativeDimension,
  InvalidConstraint,
  SearchTooLarge,
  // scenarios
  PreconditionFailed,
  StageVerificationFailed,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library surfaces as this exception; `code()` names
/// the contract violation so callers and tests can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShadowNotCommutator: return "ShadowNotCommutator";
    case ErrorCode::BadDeficiency: return "BadDeficiency";
    case ErrorCode::AlphabetClash: return "AlphabetClash";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::UnknownSpec: return "UnknownSpec";
    case ErrorCode::InvalidKnot: return "InvalidKnot";
    case ErrorCode::MissingMonodromy: return "MissingMonodromy";
    case ErrorCode::MissingBundleData: return "MissingBundleData";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::NonzeroSquare: return "NonzeroSquare";
    case ErrorCode::MissingImages: return "MissingImages";
    case ErrorCode::AbelianizationBlocked: return "AbelianizationBlocked";
    case ErrorCode::UnknownSurface: return "UnknownSurface";
    case ErrorCode::RelatorNotFound: return "RelatorNotFound";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::InconsistentModel: return "InconsistentModel";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::NoCharacteristicVector: return "NoCharacteristicVector";
    case ErrorCode::OddOrNegativeDimension: return "OddOrNegativeDimension";
    case ErrorCode::InvalidConstraint: return "InvalidConstraint";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::StageVerificationFailed: return "StageVerificationFailed";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace flab
