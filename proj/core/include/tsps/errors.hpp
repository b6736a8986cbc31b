#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tsps {

enum class ErrorCode {
  DegenerateInput,
  ParallelPlanes,
  TangentDegenerate,
  OffSphere,
  NotInScale,
  BoundaryPoint,
  NoConvergence,
  BoundaryIndex,
  DegenerateFirstForm,
  DegenerateChebyshevAngle,
  NotChebyshev,
  DegenerateTangents,
  TooSmall,
  ConsistencyViolation,
  InvalidCauchyData,
  DegenerateTetrahedron,
  OutOfValidityBand,
  SingularParametrization,
  BadAngle,
  NotChebyshevNet,
  BadFormat,
  IoFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  Error& at_index(long i, long j) {
    index_ = {i, j};
    return *this;
  }

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::pair<long, long>>& index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::pair<long, long>> index_;
};

}  // namespace tsps
