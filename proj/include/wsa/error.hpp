#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsa {

enum class ErrorCode {
    DimensionMismatch,
    DivisionByZero,
    InvalidArgument,
    TooFewVertices,
    Not2Regular,
    FNotTriangulation,
    WeightNotCycleConstant,
    AdmissibilityViolated,
    TruncationTooSmall,
    InhomogeneousRelation,
    LambdaForbidden,
    AlgebraNotSelfInjective,
    MethodMismatch,
    NotRealizable,
    NotUniserial,
    UNotUniserial,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::Not2Regular: return "Not2Regular";
    case ErrorCode::FNotTriangulation: return "FNotTriangulation";
    case ErrorCode::WeightNotCycleConstant: return "WeightNotCycleConstant";
    case ErrorCode::AdmissibilityViolated: return "AdmissibilityViolated";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorCode::LambdaForbidden: return "LambdaForbidden";
    case ErrorCode::AlgebraNotSelfInjective: return "AlgebraNotSelfInjective";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotUniserial: return "NotUniserial";
    case ErrorCode::UNotUniserial: return "UNotUniserial";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) fail(code, what);
}

} // namespace wsa
