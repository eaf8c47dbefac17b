#ifndef SYZLAB_ERRORS_HPP
#define SYZLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syzlab {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class AssociativityViolation : public Error {
public:
    AssociativityViolation(std::size_t i, std::size_t j, std::size_t k)
        : Error("associativity fails at basis triple (" + std::to_string(i) + ", " +
                std::to_string(j) + ", " + std::to_string(k) + ")"),
          i(i), j(j), k(k) {}
    std::size_t i, j, k;
};

class UnitViolation : public Error {
public:
    explicit UnitViolation(std::size_t i)
        : Error("unit does not act as identity on basis element " + std::to_string(i)), index(i) {}
    std::size_t index;
};

class IdempotentViolation : public Error {
public:
    IdempotentViolation(std::size_t a, std::size_t b, const std::string& detail)
        : Error("idempotent condition fails for indices (" + std::to_string(a) + ", " +
                std::to_string(b) + "): " + detail),
          a(a), b(b) {}
    std::size_t a, b;
};

class NotBasic : public Error {
public:
    NotBasic(std::size_t i, std::size_t j, std::size_t dim)
        : Error("algebra is not basic: dim e_" + std::to_string(i) + " (A/rad A) e_" +
                std::to_string(j) + " = " + std::to_string(dim)),
          i(i), j(j) {}
    std::size_t i, j;
};

class InconsistentRelations : public Error {
public:
    explicit InconsistentRelations(const std::string& vertex)
        : Error("relations collapse the vertex idempotent at '" + vertex + "'") {}
};

class UnsupportedField : public Error {
public:
    explicit UnsupportedField(const std::string& what) : Error(what) {}
};

class NotSelfInjective : public Error {
public:
    NotSelfInjective() : Error("operation requires a self-injective algebra") {}
};

/// Raised over a finite field when the randomized and exhaustive searches for an
/// invertible combination are both out of reach.  Distinct from a negative answer.
class FiniteFieldInconclusive : public Error {
public:
    explicit FiniteFieldInconclusive(const std::string& what) : Error(what) {}
};

/// Raised when a deterministic search grid over the rationals would be astronomically
/// large and no witness was found by randomized sampling.  Distinct from a negative answer.
class SearchSpaceExceeded : public Error {
public:
    explicit SearchSpaceExceeded(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class AlgebraMismatch : public Error {
public:
    AlgebraMismatch() : Error("operands live over different algebra instances") {}
};

class InvalidAutomorphism : public Error {
public:
    explicit InvalidAutomorphism(const std::string& what) : Error(what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class UnknownFixture : public Error {
public:
    explicit UnknownFixture(const std::string& name) : Error("unknown fixture '" + name + "'") {}
};

} // namespace syzlab

#endif
