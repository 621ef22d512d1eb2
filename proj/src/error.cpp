#include "cyclocode/error.hpp"

namespace cyclocode {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::TableBudgetExceeded: return "TableBudgetExceeded";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::NonPrimitiveModulus: return "NonPrimitiveModulus";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::CoefficientOutsideSubfield: return "CoefficientOutsideSubfield";
        case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case ErrorCode::ConditionsNotMet: return "ConditionsNotMet";
        case ErrorCode::AssumptionViolated: return "AssumptionViolated";
        case ErrorCode::InternalConsistency: return "InternalConsistency";
    }
    return "Unknown";
}

}  // namespace cyclocode
