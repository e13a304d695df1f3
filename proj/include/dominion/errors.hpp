#pragma once

#include <stdexcept>
#include <string>

namespace dominion {

enum class ErrorCode {
    IndexOutOfRange,
    SelfLoop,
    WitnessShapeMismatch,
    CodomainViolation,
    IsolatedVertex,
    BudgetExhausted,
    InfeasibleSource,
    SideConditionViolated,
    UndefinedParameter,
    SizeBelowThreshold,
    InvalidInstance,
    InfeasibleWitness,
    ParseError,
    GraphTooLarge,
    UnknownName,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dominion
