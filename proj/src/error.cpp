#include "sullivan/error.hpp"

namespace sullivan {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotASubspace: return "NotASubspace";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::InvalidDegrees: return "InvalidDegrees";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::EvenSphere: return "EvenSphere";
    case ErrorKind::DisconnectedGroup: return "DisconnectedGroup";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CutoffExceeded: return "CutoffExceeded";
    case ErrorKind::InvalidDifferential: return "InvalidDifferential";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotAChainMap: return "NotAChainMap";
    case ErrorKind::Inconsistent: return "Inconsistent";
    }
    return "Unknown";
}

bool is_validation_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::CutoffExceeded:
    case ErrorKind::InvalidDifferential:
    case ErrorKind::NotPure:
    case ErrorKind::NotAChainMap:
    case ErrorKind::Inconsistent:
        return false;
    default:
        return true;
    }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what)
{
}

}  // namespace sullivan
