#pragma once

#include <stdexcept>
#include <string>

namespace mosaic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gcd(a, m) > 1 in a modular-inverse request.
struct NotCoprime : Error {
    using Error::Error;
};

// p divides a denominator: the prime is inapplicable to the congruence,
// it is not an arithmetic bug.
struct DenominatorNotInvertible : Error {
    using Error::Error;
};

// Residue/Jacobi operations accept odd moduli only.
struct EvenModulus : Error {
    using Error::Error;
};

struct ZeroRadicand : Error {
    using Error::Error;
};

struct UnknownSeries : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct DuplicateId : Error {
    using Error::Error;
};

// Exact and modular verification paths disagreed. Always an implementation
// bug, never a mathematical finding.
struct PathMismatch : Error {
    using Error::Error;
};

} // namespace mosaic
