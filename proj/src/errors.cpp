#include "mtopos/errors.hpp"

namespace mtopos {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::IdentityLawFails: return "IdentityLawFails";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IdentityActionFails: return "IdentityActionFails";
    case ErrorKind::ActionNotAssociative: return "ActionNotAssociative";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotASubmonoid: return "NotASubmonoid";
    case ErrorKind::NotAnFMonoid: return "NotAnFMonoid";
    case ErrorKind::NotIdempotentIdeal: return "NotIdempotentIdeal";
    case ErrorKind::NotARightIdeal: return "NotARightIdeal";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::TooManyIdeals: return "TooManyIdeals";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::RoundTripFailed: return "RoundTripFailed";
    case ErrorKind::BijectionFailed: return "BijectionFailed";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::ClassificationFailed: return "ClassificationFailed";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<int> witness)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

void fail(ErrorKind kind, const std::string& message, std::vector<int> witness) {
  throw Error(kind, message, std::move(witness));
}

}  // namespace mtopos
