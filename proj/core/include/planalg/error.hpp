#pragma once

#include <stdexcept>
#include <string>

namespace planalg {

enum class ErrorCode {
    DivisionByZero,
    UncertifiableDivisor,
    NegativeRadicand,
    TowerDepthExceeded,
    IncompatibleTowers,
    Undecided,
    NotReal,
    InexactEntries,
    Singular,
    UncertifiableDeterminant,
    NotAnEigenvalue,
    EigenspaceNotOneDimensional,
    NotBipartite,
    Disconnected,
    BadBase,
    ShapeMismatch,
    BadPosition,
    VanishingQuantumInteger,
    NotLowWeight,
    SingularGram,
    NoCandidate,
    AmbiguousCandidate,
    NonzeroResidual,
    ManifestMissing,
    ParseError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace planalg
