#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opcalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// series_inverse was handed a series with q(0) = 0.
class ZeroConstantTerm : public Error {
public:
    ZeroConstantTerm() : Error("series inverse requires a nonzero constant term") {}
};

class ZeroScale : public Error {
public:
    ZeroScale() : Error("operator argument cannot be scaled by zero") {}
};

class ZeroOperator : public Error {
public:
    ZeroOperator() : Error("operator polynomial is identically zero") {}
};

/// Input is well formed but has no meaning in the equation model.
class SemanticError : public Error {
public:
    using Error::Error;
};

/// A right-hand side term outside c * b^t * p(t) * {1, cos(n*pi*t), sin(n*pi*t)}.
class UnsupportedRhs : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NonConsecutiveConditions : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class MissingInitialConditions : public Error {
public:
    MissingInitialConditions() : Error("recurrence iteration needs initial conditions") {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected, std::string snippet);

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& snippet() const noexcept { return snippet_; }

private:
    std::size_t offset_;
    std::string expected_;
    std::string snippet_;
};

}  // namespace opcalc
