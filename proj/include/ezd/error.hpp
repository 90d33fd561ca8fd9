#pragma once

#include <stdexcept>
#include <string>

namespace ezd {

enum class ErrorKind {
    SyntaxError,        // polynomial / ring-file parse failure
    UnknownVariable,
    FieldMismatch,
    ArityMismatch,
    NotPrime,
    UnitIdeal,
    NotZeroDimensional,
    NotLocal,
    NotGraded,
    NotMinimalGenerators,
    NotEmbeddedMinimally,
    Precondition,
    TooLong,            // combinatorial guard (n! / 2^n blowup)
    PoolTooLarge,
    BadInput,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    // Guard violations get a distinct process exit code in the CLI.
    bool is_guard() const { return kind_ == ErrorKind::TooLong || kind_ == ErrorKind::PoolTooLarge; }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::UnitIdeal: return "UnitIdeal";
        case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
        case ErrorKind::NotLocal: return "NotLocal";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::NotMinimalGenerators: return "NotMinimalGenerators";
        case ErrorKind::NotEmbeddedMinimally: return "NotEmbeddedMinimally";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::TooLong: return "TooLong";
        case ErrorKind::PoolTooLarge: return "PoolTooLarge";
        case ErrorKind::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace ezd
