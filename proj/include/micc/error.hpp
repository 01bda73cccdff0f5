#pragma once

#include <stdexcept>
#include <string>

namespace micc {

enum class ErrorKind {
    Io,
    Parse,
    Validation,
    Unrepresentable,
    Argument,
    Overflow,
};

// Single exception type for the whole library; `kind` maps 1:1 onto the
// C API status codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    static Error io(std::string m) { return {ErrorKind::Io, std::move(m)}; }
    static Error parse(std::string m) { return {ErrorKind::Parse, std::move(m)}; }
    static Error validation(std::string m) { return {ErrorKind::Validation, std::move(m)}; }
    static Error unrepresentable(std::string m) { return {ErrorKind::Unrepresentable, std::move(m)}; }
    static Error argument(std::string m) { return {ErrorKind::Argument, std::move(m)}; }
    static Error overflow(std::string m) { return {ErrorKind::Overflow, std::move(m)}; }

private:
    ErrorKind kind_;
};

} // namespace micc
