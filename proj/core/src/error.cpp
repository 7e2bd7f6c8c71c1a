#include "epiclo/error.hpp"

namespace epiclo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TableShape: return "TableShape";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::UnknownOp: return "UnknownOp";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::FibreMismatch: return "FibreMismatch";
    case ErrorCode::NotCongruence: return "NotCongruence";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotInE: return "NotInE";
    case ErrorCode::NotExtensive: return "NotExtensive";
    case ErrorCode::NotNatural: return "NotNatural";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotCohereditary: return "NotCohereditary";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::UniverseNotQuotientClosed: return "UniverseNotQuotientClosed";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotReflective: return "NotReflective";
    case ErrorCode::NotRng: return "NotRng";
    case ErrorCode::NotQuandle: return "NotQuandle";
    case ErrorCode::NotGroup: return "NotGroup";
    case ErrorCode::CompositeNotCongruence: return "CompositeNotCongruence";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& message, nlohmann::json witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace epiclo
