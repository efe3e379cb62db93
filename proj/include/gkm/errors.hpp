#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings of different rank.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A direction pairs to zero with some edge weight.
class GenericityError : public Error {
public:
    using Error::Error;
};

/// The graph violates the moment-graph invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (rationals, polynomials, graph files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// The graph cannot model a closed Hamiltonian T-space: a class whose
/// existence is guaranteed for genuine moment graphs is missing.
class StructuralError : public Error {
public:
    using Error::Error;
};

}  // namespace gkm
