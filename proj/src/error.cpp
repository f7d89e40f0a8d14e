#include "kmstab/error.hpp"

namespace kmstab {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::Loop: return "LoopError";
        case ErrorKind::Disconnected: return "DisconnectedError";
        case ErrorKind::Decomposable: return "DecomposableError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ZeroVector: return "ZeroVectorError";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotASector: return "NotASector";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::NotFiniteType: return "NotFiniteType";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::MultipleWalls: return "MultipleWalls";
        case ErrorKind::PathTooDegenerate: return "PathTooDegenerate";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::Internal: return "InternalError";
    }
    return "UnknownError";
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidInput:
        case ErrorKind::Loop:
        case ErrorKind::Disconnected:
        case ErrorKind::Decomposable:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::IndexOutOfRange:
        case ErrorKind::ZeroVector:
        case ErrorKind::NotFiniteType:
        case ErrorKind::NotClosed:
            return 2;
        case ErrorKind::BudgetExceeded:
        case ErrorKind::CapExceeded:
        case ErrorKind::PrecisionExhausted:
            return 3;
        default:
            return 1; // negative verdicts and degeneracies on well-formed input
    }
}

} // namespace kmstab
