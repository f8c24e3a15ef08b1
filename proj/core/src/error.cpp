#include "planalg/error.hpp"

namespace planalg {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::UncertifiableDivisor: return "UncertifiableDivisor";
        case ErrorCode::NegativeRadicand: return "NegativeRadicand";
        case ErrorCode::TowerDepthExceeded: return "TowerDepthExceeded";
        case ErrorCode::IncompatibleTowers: return "IncompatibleTowers";
        case ErrorCode::Undecided: return "Undecided";
        case ErrorCode::NotReal: return "NotReal";
        case ErrorCode::InexactEntries: return "InexactEntries";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::UncertifiableDeterminant: return "UncertifiableDeterminant";
        case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
        case ErrorCode::EigenspaceNotOneDimensional: return "EigenspaceNotOneDimensional";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::BadBase: return "BadBase";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::BadPosition: return "BadPosition";
        case ErrorCode::VanishingQuantumInteger: return "VanishingQuantumInteger";
        case ErrorCode::NotLowWeight: return "NotLowWeight";
        case ErrorCode::SingularGram: return "SingularGram";
        case ErrorCode::NoCandidate: return "NoCandidate";
        case ErrorCode::AmbiguousCandidate: return "AmbiguousCandidate";
        case ErrorCode::NonzeroResidual: return "NonzeroResidual";
        case ErrorCode::ManifestMissing: return "ManifestMissing";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace planalg
