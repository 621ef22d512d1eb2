#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclocode {

enum class ErrorCode {
    InvalidArgument,
    NotPrime,
    TableBudgetExceeded,
    ReducibleModulus,
    NonPrimitiveModulus,
    DivisionByZero,
    CoefficientOutsideSubfield,
    OrderDoesNotDivide,
    HypothesisViolated,
    OddDegree,
    EnumerationBudgetExceeded,
    ConditionsNotMet,
    AssumptionViolated,
    InternalConsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// Internal-consistency failures indicate a bug, not bad input.
    bool is_internal() const noexcept {
        return code_ == ErrorCode::InternalConsistency ||
               code_ == ErrorCode::CoefficientOutsideSubfield;
    }

private:
    ErrorCode code_;
};

}  // namespace cyclocode
