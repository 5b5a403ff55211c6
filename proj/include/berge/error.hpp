#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berge {

/// Failure categories shared by every module.
enum class ErrorKind {
    DuplicateEdge,
    VertexOutOfRange,
    EdgeSizeMismatch,
    MalformedLine,
    InvalidEdge,
    ArityTooLarge,
    EdgeNotInShadow,
    PreconditionUnmet,
    NotLinear,
    NotTripartite,
    Disconnected,
    WNotInTree,
    DegenerateFrame,
    ClassificationFailure,
    InvalidParameters,
    BudgetExhausted,
    VerificationFailure,
    InternalProofFailure,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EdgeSizeMismatch: return "EdgeSizeMismatch";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::ArityTooLarge: return "ArityTooLarge";
    case ErrorKind::EdgeNotInShadow: return "EdgeNotInShadow";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::NotTripartite: return "NotTripartite";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::WNotInTree: return "WNotInTree";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::ClassificationFailure: return "ClassificationFailure";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::InternalProofFailure: return "InternalProofFailure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when a constructive step that a counting argument guarantees does
/// not produce its object. Never expected to fire; the acceptance suite counts it.
[[noreturn]] inline void proof_failure(const std::string& step) {
    throw Error(ErrorKind::InternalProofFailure, step);
}

[[noreturn]] inline void precondition(const std::string& what) {
    throw Error(ErrorKind::PreconditionUnmet, what);
}

} // namespace berge
