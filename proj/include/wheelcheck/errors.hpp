#ifndef WHEELCHECK_ERRORS_HPP
#define WHEELCHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wheelcheck {

enum class ErrorCode {
    NonSimple,
    RotationMismatch,
    OuterNotACycle,
    EmbeddingInconsistent,
    MissingPathEdge,
    NotAChord,
    UnsupportedLength,
    BoundsExceeded,
    ExceedsCaps,
    EdgeBudgetExceeded,
    BadParameter,
    PreconditionViolated,
    TheoremViolation,
    UnknownLemma,
    NotThreeColorable,
    BudgetExceeded,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonSimple: return "NonSimple";
        case ErrorCode::RotationMismatch: return "RotationMismatch";
        case ErrorCode::OuterNotACycle: return "OuterNotACycle";
        case ErrorCode::EmbeddingInconsistent: return "EmbeddingInconsistent";
        case ErrorCode::MissingPathEdge: return "MissingPathEdge";
        case ErrorCode::NotAChord: return "NotAChord";
        case ErrorCode::UnsupportedLength: return "UnsupportedLength";
        case ErrorCode::BoundsExceeded: return "BoundsExceeded";
        case ErrorCode::ExceedsCaps: return "ExceedsCaps";
        case ErrorCode::EdgeBudgetExceeded: return "EdgeBudgetExceeded";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::UnknownLemma: return "UnknownLemma";
        case ErrorCode::NotThreeColorable: return "NotThreeColorable";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace wheelcheck

#endif
