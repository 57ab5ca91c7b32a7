#include "polydeg/error.hpp"

namespace polydeg {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::EmptyPolytope: return "EmptyPolytope";
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NegativeExponent: return "NegativeExponent";
        case ErrorKind::InvalidOrder: return "InvalidOrder";
        case ErrorKind::InvalidCycle: return "InvalidCycle";
        case ErrorKind::FanNotCompatible: return "FanNotCompatible";
        case ErrorKind::ResolutionBudgetExceeded: return "ResolutionBudgetExceeded";
        case ErrorKind::LiftingFailure: return "LiftingFailure";
        case ErrorKind::InvalidInstance: return "InvalidInstance";
        case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace polydeg
