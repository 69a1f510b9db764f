#include "gbs/error.hpp"

namespace gbs {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::InvalidId: return "InvalidId";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NonUniqueSimpleCycle: return "NonUniqueSimpleCycle";
    case ErrorKind::MixedField: return "MixedField";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonPositiveRadicand: return "NonPositiveRadicand";
    case ErrorKind::EmptyRangeDomain: return "EmptyRangeDomain";
    case ErrorKind::IrrationalSlope: return "IrrationalSlope";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorKind::MissingTheta: return "MissingTheta";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::RangeMismatch: return "RangeMismatch";
    case ErrorKind::SinkOrInfiniteEmitter: return "SinkOrInfiniteEmitter";
    case ErrorKind::RationalTheta: return "RationalTheta";
    case ErrorKind::NotABasePoint: return "NotABasePoint";
    case ErrorKind::NotRotationSystem: return "NotRotationSystem";
    case ErrorKind::ConditionLHolds: return "ConditionLHolds";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace gbs
