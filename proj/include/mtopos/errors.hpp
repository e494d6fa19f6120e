#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mtopos {

enum class ErrorKind {
  // validation failures, with witnesses
  NotAssociative,
  IdentityLawFails,
  IndexOutOfRange,
  IdentityActionFails,
  ActionNotAssociative,
  NotACongruence,
  NotCommutative,
  NotASubmonoid,
  NotAnFMonoid,
  NotIdempotentIdeal,
  NotARightIdeal,
  // capacity guards
  ClosureTooLarge,
  CarrierTooLarge,
  TooManyIdeals,
  OrderTooLarge,
  // internal assertions; firing one would contradict a proved statement
  RoundTripFailed,
  BijectionFailed,
  MethodDisagreement,
  ClassificationFailed,
  InternalInvariant,
  // io
  ParseError,
};

const char* error_kind_name(ErrorKind k);

/// Error with a machine-readable kind and integer witnesses (element or
/// carrier indices; the meaning of each slot depends on the kind).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message,
                       std::vector<int> witness = {});

}  // namespace mtopos
