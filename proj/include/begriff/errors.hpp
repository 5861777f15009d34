#pragma once

#include "begriff/ast.hpp"

#include <stdexcept>
#include <string>

namespace begriff {

struct Error : std::runtime_error {
    SourceSpan span;
    Error(std::string msg, SourceSpan sp = {}) : std::runtime_error(std::move(msg)), span(sp) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct CaptureError : Error {
    std::string boundVar;
    CaptureError(std::string msg, std::string bv, SourceSpan sp = {})
        : Error(std::move(msg), sp), boundVar(std::move(bv)) {}
};

struct SideConditionViolation : Error {
    std::string condition; // short machine name of the violated side condition
    SideConditionViolation(std::string cond, std::string msg, SourceSpan sp = {})
        : Error(std::move(msg), sp), condition(std::move(cond)) {}
};

struct MissingBinding : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct LayerMismatch : Error {
    using Error::Error;
};

struct GuardBlocked : Error {
    std::string blockingTheorem; // id of the certified distinctness theorem
    GuardBlocked(std::string msg, std::string blocker, SourceSpan sp = {})
        : Error(std::move(msg), sp), blockingTheorem(std::move(blocker)) {}
};

} // namespace begriff
