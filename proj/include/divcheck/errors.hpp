#pragma once

#include <stdexcept>
#include <string>

namespace divcheck {

/// Base for all library errors. Subclasses map onto CLI exit codes:
/// input/validation problems exit with 2, internal cross-method
/// disagreements with 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct TooFewNodesError : Error { using Error::Error; };
struct DuplicateNodesError : Error { using Error::Error; };
struct OutOfDomainError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NodeCollisionError : Error { using Error::Error; };
struct DegenerateOrderError : Error { using Error::Error; };
struct QuadratureFailureError : Error { using Error::Error; };
struct ConvexityError : Error { using Error::Error; };
struct NotComparableError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct MethodDisagreementError : Error { using Error::Error; };

}  // namespace divcheck
