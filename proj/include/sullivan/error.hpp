#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sullivan {

enum class ErrorKind {
    // validation errors: malformed input, CLI exit code 1
    DimensionMismatch,
    NotASubspace,
    NotIndependent,
    UnknownGenerator,
    InvalidDegrees,
    DegreeMismatch,
    EvenSphere,
    DisconnectedGroup,
    InvalidDiagram,
    SchemaError,
    UnknownCatalogName,
    ParseError,
    // computation errors: CLI exit code 2
    CutoffExceeded,
    InvalidDifferential,
    NotPure,
    NotAChainMap,
    Inconsistent,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that indicate bad input rather than a failed computation.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }
    /// what() without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace sullivan
