#include "svt/errors.hpp"

namespace svt {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::InvalidWeilRep: return "InvalidWeilRep";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MultiplicityNotSupported: return "MultiplicityNotSupported";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::TailMismatch: return "TailMismatch";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NotDiscrete: return "NotDiscrete";
    case ErrorCode::ParityInconsistentPartition: return "ParityInconsistentPartition";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::MultipleOwners: return "MultipleOwners";
    case ErrorCode::IrregularLambda: return "IrregularLambda";
    case ErrorCode::NonIntegralLambda: return "NonIntegralLambda";
    case ErrorCode::SizeViolation: return "SizeViolation";
    case ErrorCode::IdentityFailure: return "IdentityFailure";
  }
  return "Unknown";
}

bool is_invariant_breach(ErrorCode c) {
  return c == ErrorCode::MultipleOwners || c == ErrorCode::IdentityFailure;
}

Error::Error(ErrorCode c, const std::string& msg)
    : std::runtime_error(std::string(code_name(c)) + ": " + msg), code_(c) {}

void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace svt
