#include "ctube/error.hpp"

namespace ctube {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidLength: return "InvalidLength";
        case ErrorKind::InvalidRank: return "InvalidRank";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::WingUndefined: return "WingUndefined";
        case ErrorKind::NotExchangePair: return "NotExchangePair";
        case ErrorKind::NotRigid: return "NotRigid";
        case ErrorKind::InShift: return "InShift";
        case ErrorKind::InternalInvariantBroken: return "InternalInvariantBroken";
        case ErrorKind::BadDirection: return "BadDirection";
        case ErrorKind::LaurentViolation: return "LaurentViolation";
        case ErrorKind::GradingViolation: return "GradingViolation";
        case ErrorKind::Undefined: return "Undefined";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

CtError::CtError(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

void fail(ErrorKind kind, const std::string& msg) { throw CtError(kind, msg); }

}  // namespace ctube
