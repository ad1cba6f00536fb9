#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blueprint {

enum class ErrorCode {
    FaceNotInComplex,
    VertexClash,
    InvalidFace,
    NotPure2Dimensional,
    NotDisklike,
    DimensionMismatch,
    DegenerateFace,
    NotSubcomplex,
    ImproperRealization,
    DegreeMismatch,
    TopDegreeNotOneDimensional,
    ShapeMismatch,
    NotBoundaryVertex,
    DimensionNotThree,
    PropernessFailedAfterRetries,
    WrongInput,
    Parse,
    Validation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so callers
/// (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace blueprint
