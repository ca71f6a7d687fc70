#ifndef GDESIGN_ERROR_HPP
#define GDESIGN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdesign {

enum class ErrorCode {
    OutOfRange,
    Loop,
    Duplicate,
    Disconnected,
    UnknownFixture,
    NumericalFailure,
    DimensionMismatch,
    InvalidDesign,
    FullyIntegrated,
    BadTarget,
    NotRegular,
    TooLarge,
    OutOfSupportedRange,
    TooShort,
    EmptyIndexSet,
    DegenerateSubset,
    NotStable,
    EigenspaceMismatch,
    ParseError,
    Mismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gdesign

#endif
