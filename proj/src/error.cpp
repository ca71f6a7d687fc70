#include "gdesign/error.hpp"

namespace gdesign {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Loop: return "Loop";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidDesign: return "InvalidDesign";
    case ErrorCode::FullyIntegrated: return "FullyIntegrated";
    case ErrorCode::BadTarget: return "BadTarget";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfSupportedRange: return "OutOfSupportedRange";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorCode::DegenerateSubset: return "DegenerateSubset";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::EigenspaceMismatch: return "EigenspaceMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Mismatch: return "Mismatch";
    }
    return "Unknown";
}

}  // namespace gdesign
