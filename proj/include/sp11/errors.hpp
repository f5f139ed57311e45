#pragma once

#include <stdexcept>
#include <string>

namespace sp11 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDivisor : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NotARoot : Error { using Error::Error; };
struct BasisDecompositionError : Error { using Error::Error; };
struct SolverDegenerate : Error { using Error::Error; };
struct DiagramMismatch : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct EvaluationError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace sp11
