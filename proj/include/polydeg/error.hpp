#pragma once

#include <stdexcept>
#include <string>

namespace polydeg {

enum class ErrorKind {
    InvalidInput,
    EmptyPolytope,
    DimMismatch,
    ArityMismatch,
    NotPointed,
    SyntaxError,
    NegativeExponent,
    InvalidOrder,
    InvalidCycle,
    FanNotCompatible,
    ResolutionBudgetExceeded,
    LiftingFailure,
    InvalidInstance,
    CrossCheckFailure,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace polydeg
