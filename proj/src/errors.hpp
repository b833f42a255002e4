#pragma once

#include <stdexcept>
#include <string>

namespace gsum {

enum class ErrorCode {
    BadArgument,
    EmptySource,
    BadFamilyParams,
    BadScale,
    NotEpsSummable,
    BadZetaArgument,
    ProductFrontierOverflow,
    LevelOverflow,
    CutoffBeyondTruncation,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace gsum
