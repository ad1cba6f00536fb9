#include "blueprint/error.hpp"

namespace blueprint {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::VertexClash: return "VertexClash";
    case ErrorCode::InvalidFace: return "InvalidFace";
    case ErrorCode::NotPure2Dimensional: return "NotPure2Dimensional";
    case ErrorCode::NotDisklike: return "NotDisklike";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::NotSubcomplex: return "NotSubcomplex";
    case ErrorCode::ImproperRealization: return "ImproperRealization";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::TopDegreeNotOneDimensional: return "TopDegreeNotOneDimensional";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotBoundaryVertex: return "NotBoundaryVertex";
    case ErrorCode::DimensionNotThree: return "DimensionNotThree";
    case ErrorCode::PropernessFailedAfterRetries: return "PropernessFailedAfterRetries";
    case ErrorCode::WrongInput: return "WrongInput";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Validation: return "Validation";
    }
    return "Unknown";
}

}  // namespace blueprint
