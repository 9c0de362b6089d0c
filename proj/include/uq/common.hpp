#ifndef UQ_COMMON_HPP
#define UQ_COMMON_HPP

#include <stdexcept>
#include <string>

namespace uq {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or parameter constraint violation detected at construction.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Expression syntax error; carries the offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Failure while evaluating a model backend (domain error, wrapper failure, ...).
class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

/// Iterative algorithm exceeded its budget without meeting its tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

} // namespace uq

#endif
