#pragma once

#include <stdexcept>
#include <string>

namespace strohhacker {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A scalar argument lies outside the stated domain of a formula.
struct DomainError : Error {
    using Error::Error;
};

/// Series division by a series whose constant term is (numerically) zero.
struct ZeroLeadingCoefficient : Error {
    using Error::Error;
};

/// Square-root recursion requires a unit constant term.
struct NotNormalized : Error {
    using Error::Error;
};

/// Evaluation point outside the closed unit disk.
struct OutOfDisk : Error {
    using Error::Error;
};

/// phi(x, a, b) evaluated at the b = 0, x = 0 singularity.
struct SingularDenominator : Error {
    using Error::Error;
};

/// Parameters fail the quadratic feasibility condition of the T37 bound.
struct Infeasible : Error {
    using Error::Error;
};

/// An admissibility map was evaluated at (or too close to) its pole.
struct PoleHit : Error {
    using Error::Error;
};

/// Generated unit part vanishes on the sample grid even after retries.
struct UnitVanishes : Error {
    using Error::Error;
};

/// A function does not belong to the class required by an implication case.
struct ClassMismatch : Error {
    using Error::Error;
};

} // namespace strohhacker
