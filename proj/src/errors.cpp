#include "ersurf/errors.hpp"

namespace ersurf {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidSecancy: return "InvalidSecancy";
    case ErrorCode::UnsupportedSecancy: return "UnsupportedSecancy";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotBasePointFree: return "NotBasePointFree";
    case ErrorCode::InvalidPointSpec: return "InvalidPointSpec";
    case ErrorCode::NonNormalizedInput: return "NonNormalizedInput";
    case ErrorCode::DegenerateModel: return "DegenerateModel";
    case ErrorCode::UnreachableTarget: return "UnreachableTarget";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    }
    return "Unknown";
}

}  // namespace ersurf
