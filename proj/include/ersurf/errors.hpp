#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ersurf {

enum class ErrorCode {
    MixedGroups,
    GroupTooLarge,
    InvalidModel,
    InvalidSecancy,
    UnsupportedSecancy,
    HypothesisNotMet,
    PreconditionViolated,
    NotBasePointFree,
    InvalidPointSpec,
    NonNormalizedInput,
    DegenerateModel,
    UnreachableTarget,
    ParseError,
    SemanticError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the engine carries a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace ersurf
