#include "tsps/errors.hpp"

namespace tsps {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ParallelPlanes: return "ParallelPlanes";
    case ErrorCode::TangentDegenerate: return "TangentDegenerate";
    case ErrorCode::OffSphere: return "OffSphere";
    case ErrorCode::NotInScale: return "NotInScale";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BoundaryIndex: return "BoundaryIndex";
    case ErrorCode::DegenerateFirstForm: return "DegenerateFirstForm";
    case ErrorCode::DegenerateChebyshevAngle: return "DegenerateChebyshevAngle";
    case ErrorCode::NotChebyshev: return "NotChebyshev";
    case ErrorCode::DegenerateTangents: return "DegenerateTangents";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::InvalidCauchyData: return "InvalidCauchyData";
    case ErrorCode::DegenerateTetrahedron: return "DegenerateTetrahedron";
    case ErrorCode::OutOfValidityBand: return "OutOfValidityBand";
    case ErrorCode::SingularParametrization: return "SingularParametrization";
    case ErrorCode::BadAngle: return "BadAngle";
    case ErrorCode::NotChebyshevNet: return "NotChebyshevNet";
    case ErrorCode::BadFormat: return "BadFormat";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace tsps
