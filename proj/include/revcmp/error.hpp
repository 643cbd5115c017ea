#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace revcmp {

enum class ErrorKind {
    UnknownGate,
    NotBijective,
    Range,
    DuplicateName,
    Wiring,
    Assignment,
    TooLarge,
    Syntax,
    RoleConflict,
    Contract,
    UnknownTarget,
    NoData,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind lets callers branch
/// without a catch clause per subclass.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the .rnl reader; carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace revcmp
