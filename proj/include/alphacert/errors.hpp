#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphacert {

// All recoverable failures are exceptions rooted here, so callers can catch
// the library as a whole or pick specific conditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact elimination found no nonzero pivot: the matrix is singular.
class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

// Df(x) is not invertible at the evaluation point.
class SingularJacobian : public Error {
public:
    SingularJacobian() : Error("Jacobian is singular at the evaluation point") {}
};

class NegativeInput : public Error {
public:
    explicit NegativeInput(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class DegreeZeroPolynomial : public Error {
public:
    explicit DegreeZeroPolynomial(std::size_t index)
        : Error("polynomial " + std::to_string(index) + " has degree 0"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// The (m, k, l, q, u, w) counts do not describe a well-constrained system.
class StructureArithmetic : public Error {
public:
    explicit StructureArithmetic(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace alphacert
