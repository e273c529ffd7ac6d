#pragma once

#include <stdexcept>
#include <string>

namespace ctube {

// Failure taxonomy for the whole library. The kinds split into two camps:
// bad input (InvalidLength, InvalidRank, RankMismatch, WingUndefined,
// NotExchangePair, NotRigid, InShift, BadDirection, Undefined, UsageError)
// and broken mathematics (InternalInvariantBroken, LaurentViolation,
// GradingViolation). The second camp is never expected to fire; each such
// throw means either an implementation bug or a falsified theorem.
enum class ErrorKind {
    InvalidLength,
    InvalidRank,
    RankMismatch,
    WingUndefined,
    NotExchangePair,
    NotRigid,
    InShift,
    InternalInvariantBroken,
    BadDirection,
    LaurentViolation,
    GradingViolation,
    Undefined,
    UsageError,
};

const char* to_string(ErrorKind k);

class CtError : public std::runtime_error {
public:
    CtError(ErrorKind kind, const std::string& msg);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

}  // namespace ctube
