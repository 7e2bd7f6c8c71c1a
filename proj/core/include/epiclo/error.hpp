#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace epiclo {

enum class ErrorCode {
  TableShape,
  OutOfRange,
  AxiomViolation,
  UnknownOp,
  SignatureMismatch,
  FibreMismatch,
  NotCongruence,
  NotHomomorphism,
  NotInE,
  NotExtensive,
  NotNatural,
  NotIdempotent,
  NotCohereditary,
  PreconditionFailed,
  UniverseMismatch,
  UniverseNotQuotientClosed,
  NotMember,
  NotReflective,
  NotRng,
  NotQuandle,
  NotGroup,
  CompositeNotCongruence,
  SizeTooLarge,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type. `witness` carries the
// offending data (assignment, congruence, hom) in the report JSON format.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message,
        nlohmann::json witness = nullptr);

  ErrorCode code() const noexcept { return code_; }
  nlohmann::json const& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  nlohmann::json witness_;
};

}  // namespace epiclo
