#pragma once

#include <stdexcept>
#include <string>

namespace kmstab {

enum class ErrorKind {
    Parse,
    InvalidInput,
    Loop,
    Disconnected,
    Decomposable,
    DimensionMismatch,
    IndexOutOfRange,
    ZeroVector,
    BudgetExceeded,
    CapExceeded,
    NotASector,
    PrecisionExhausted,
    NotFiniteType,
    NotRegular,
    InvariantViolation,
    MultipleWalls,
    PathTooDegenerate,
    PreconditionFailed,
    NotClosed,
    Internal,
};

const char* kind_name(ErrorKind k);

// CLI exit code families: 2 = malformed input object, 1 = negative mathematical
// verdict on a well-formed input, 3 = budget/cap/precision exhaustion.
int exit_code(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
    throw Error(k, msg);
}

} // namespace kmstab
