#include "dominion/errors.hpp"

namespace dominion {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::WitnessShapeMismatch: return "WitnessShapeMismatch";
        case ErrorCode::CodomainViolation: return "CodomainViolation";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::InfeasibleSource: return "InfeasibleSource";
        case ErrorCode::SideConditionViolated: return "SideConditionViolated";
        case ErrorCode::UndefinedParameter: return "UndefinedParameter";
        case ErrorCode::SizeBelowThreshold: return "SizeBelowThreshold";
        case ErrorCode::InvalidInstance: return "InvalidInstance";
        case ErrorCode::InfeasibleWitness: return "InfeasibleWitness";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::GraphTooLarge: return "GraphTooLarge";
        case ErrorCode::UnknownName: return "UnknownName";
    }
    return "Unknown";
}

}  // namespace dominion
