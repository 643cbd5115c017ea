#include "revcmp/error.hpp"

namespace revcmp {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::UnknownGate: return "UnknownGate";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::Wiring: return "WiringError";
    case ErrorKind::Assignment: return "AssignmentError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::RoleConflict: return "RoleConflict";
    case ErrorKind::Contract: return "ContractError";
    case ErrorKind::UnknownTarget: return "UnknownTarget";
    case ErrorKind::NoData: return "NoData";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, std::size_t line, const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace revcmp
