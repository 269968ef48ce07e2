#include "monosite/error.hpp"

namespace monosite {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::CharacteristicZero: return "CharacteristicZero";
    case ErrorKind::InternalBound: return "InternalBound";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::IsMonomial: return "IsMonomial";
    case ErrorKind::NotRelativelyPrime: return "NotRelativelyPrime";
    case ErrorKind::BothConstant: return "BothConstant";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorKind::OracleUnavailable: return "OracleUnavailable";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_limit(ErrorKind kind) {
  return kind == ErrorKind::InstanceTooLarge || kind == ErrorKind::OracleBudgetExceeded ||
         kind == ErrorKind::InternalBound || kind == ErrorKind::OracleUnavailable;
}

}  // namespace monosite
