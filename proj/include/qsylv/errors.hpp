#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsylv {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands outside an operation's domain (precondition violation).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Inversion or division by a (near-)zero quaternion; message names the operand.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Operation posed only for nonzero input received (near-)zero.
class ZeroInputError : public Error {
public:
    using Error::Error;
};

/// A code path that must be unreachable was reached.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Text input rejected by the quaternion grammar; carries the character position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace qsylv
