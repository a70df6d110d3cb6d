#pragma once

#include <stdexcept>
#include <string>

namespace svt {

enum class ErrorCode {
  InvalidGroup,
  InvalidSpace,
  InvalidWeilRep,
  ParseError,
  DimensionMismatch,
  MultiplicityNotSupported,
  PartitionMismatch,
  TailMismatch,
  ParityMismatch,
  NotDiscrete,
  ParityInconsistentPartition,
  WrongCase,
  RankTooLarge,
  MultipleOwners,
  IrregularLambda,
  NonIntegralLambda,
  SizeViolation,
  IdentityFailure,
};

const char* code_name(ErrorCode c);

// Breaches of internal invariants, as opposed to bad input.
bool is_invariant_breach(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& msg);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode c, const std::string& msg);

}  // namespace svt
