#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace syslat {

enum class ErrorCode {
    EvenPrime,
    NotAHomomorphism,
    DivisionByZero,
    PoleAtSpecialization,
    MissingRadicalValue,
    InvalidSpecialization,
    NonSquare,
    NonDiagonal,
    ZeroDiagonalEntry,
    MissingGenerator,
    SolverFailed,
    NoConjugatorFound,
    SearchExhausted,
    BasisDegenerate,
    InvalidD,
    PrimeDoesNotDivideT,
    CapExceeded,
    NonIntegralEntry,
    HypothesisViolated,
    ParseError,
    ChecksumMismatch,
    DomainMismatch,
    InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtSpecialization: return "PoleAtSpecialization";
    case ErrorCode::MissingRadicalValue: return "MissingRadicalValue";
    case ErrorCode::InvalidSpecialization: return "InvalidSpecialization";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonDiagonal: return "NonDiagonal";
    case ErrorCode::ZeroDiagonalEntry: return "ZeroDiagonalEntry";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::SolverFailed: return "SolverFailed";
    case ErrorCode::NoConjugatorFound: return "NoConjugatorFound";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::BasisDegenerate: return "BasisDegenerate";
    case ErrorCode::InvalidD: return "InvalidD";
    case ErrorCode::PrimeDoesNotDivideT: return "PrimeDoesNotDivideT";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NonIntegralEntry: return "NonIntegralEntry";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can dispatch on the kind rather than the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace syslat
