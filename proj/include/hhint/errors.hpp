#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhint {

// Base class for all errors raised by this library. Everything derives from
// std::runtime_error so callers may catch either granularly or wholesale.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic combined two field elements living over distinct moduli.
struct MixedModulusError : Error {
    MixedModulusError(uint32_t a, uint32_t b)
        : Error("mixed moduli: " + std::to_string(a) + " vs " + std::to_string(b)),
          lhs(a), rhs(b) {}
    uint32_t lhs, rhs;
};

// Modulus rejected: not prime, or outside the supported range [2, 2^15).
struct BadModulusError : Error {
    explicit BadModulusError(uint32_t p)
        : Error("modulus " + std::to_string(p) + " is not a prime in [2, 2^15)"), p(p) {}
    uint32_t p;
};

// Division by zero or inversion of a non-invertible element.
struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero in F_p") {}
};

// Shape or ambient-dimension mismatch between operands.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

// Structure constants fail associativity at basis triple (i, j, k).
struct AssociativityError : Error {
    AssociativityError(int i, int j, int k)
        : Error("associativity fails at basis triple (" + std::to_string(i) + ", " +
                std::to_string(j) + ", " + std::to_string(k) + ")"),
          i(i), j(j), k(k) {}
    int i, j, k;
};

// Declared unit is not a two-sided unit at basis index i.
struct UnitError : Error {
    explicit UnitError(int i)
        : Error("unit law fails at basis index " + std::to_string(i)), i(i) {}
    int i;
};

// Requested object exceeds a configured size bound (group order, dimension).
struct BoundError : Error {
    explicit BoundError(const std::string& msg) : Error("bound exceeded: " + msg) {}
};

// Radical requested for an algebra where no method applies.
struct RadicalUnavailableError : Error {
    RadicalUnavailableError()
        : Error("radical unavailable: not supplied by the constructor and the "
                "algebra is not commutative") {}
};

// Element expected to be central is not.
struct NotCentralError : Error {
    NotCentralError() : Error("element is not central") {}
};

// Subspace expected to be closed under the Lie bracket is not.
struct NotBracketClosedError : Error {
    NotBracketClosedError() : Error("subspace is not closed under the bracket") {}
};

// Cochain degree outside the implemented range 0..3.
struct DegreeError : Error {
    explicit DegreeError(int d)
        : Error("cochain degree " + std::to_string(d) + " outside 0..3"), degree(d) {}
    int degree;
};

// Map fails a derivation axiom (Leibniz or unit annihilation).
struct NotADerivationError : Error {
    explicit NotADerivationError(const std::string& msg)
        : Error("not a derivation: " + msg) {}
};

// Truncated automorphism coefficients violate a multiplicativity identity.
struct NotMultiplicativeError : Error {
    explicit NotMultiplicativeError(const std::string& msg)
        : Error("multiplicativity fails: " + msg) {}
};

// Text input could not be parsed; line is 1-based.
struct ParseError : Error {
    ParseError(int line, const std::string& msg)
        : Error("parse error at line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

}  // namespace hhint
