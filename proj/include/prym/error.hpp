#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prym {

enum class ErrorKind {
    InvalidArgument,
    BadPrime,
    Degenerate,
    Convergence,
    DegreeCap,
    Parse,
    Internal,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure reported by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::Parse, message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Thrown by the root finder; carries the smallest max-residual it reached.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double best_residual)
        : Error(ErrorKind::Convergence, message), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

} // namespace prym
