#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mahler {

enum class ErrorKind {
    TooFewVertices,
    NonConvex,
    OriginNotInterior,
    ZeroDirection,
    SingularMatrix,
    PointNotInterior,
    NoConvergence,
    InvalidDimension,
    SandwichUnsatisfiable,
    NotSymmetric,
    DegenerateBody,
    NoContacts,
    AreaOutOfRange,
    BisectionFailure,
    DomainError,
    BehrendPatternMissing,
    ConvexityLost,
    InsufficientData,
    NonPositiveDeficit,
    InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mahler
