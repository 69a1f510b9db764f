#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbs {

/// Machine-readable failure categories. The CLI reports these by name.
enum class ErrorKind {
  // graph
  DanglingEdge,
  DuplicateId,
  InvalidId,
  EmptyGraph,
  UnknownVertex,
  UnknownEdge,
  NotAPath,
  NonUniqueSimpleCycle,
  // scalars
  MixedField,
  InvalidField,
  DivisionByZero,
  NonPositiveRadicand,
  // branching systems
  EmptyRangeDomain,
  IrrationalSlope,
  InvalidMap,
  ThetaOutOfRange,
  MissingTheta,
  // terms
  GraphMismatch,
  RangeMismatch,
  SinkOrInfiniteEmitter,
  // faithfulness
  RationalTheta,
  NotABasePoint,
  NotRotationSystem,
  ConditionLHolds,
  // io
  ParseError,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gbs
