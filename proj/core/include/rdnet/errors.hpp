#pragma once

#include <stdexcept>
#include <string>

namespace rdnet {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** An input object violates one of its structural invariants. */
class ValidationError : public Error {
public:
    using Error::Error;
};

/** Rate constants are inconsistent with the existence of a positive
    detailed-balanced equilibrium (Wegscheider-type violation). */
class NotDetailedBalanced : public ValidationError {
public:
    NotDetailedBalanced(const std::string& what, double residual)
        : ValidationError(what), residual(residual) {}
    double residual;
};

/** A concentration argument has a nonpositive component. */
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/** An iterative solver ran out of iterations. */
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, int iterations, double residual)
        : Error(what), iterations(iterations), residual(residual) {}
    int iterations;
    double residual;
};

// --- mesh construction ---

class NonManifold : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InconsistentOrientation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateCell : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotWellCentered : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- time integration ---

class StepSizeUnderflow : public Error {
public:
    StepSizeUnderflow(const std::string& what, double t, double h)
        : Error(what), t(t), h(h) {}
    double t;
    double h;
};

class MaxStepsExceeded : public Error {
public:
    MaxStepsExceeded(const std::string& what, double t) : Error(what), t(t) {}
    double t;
};

// --- file handling ---

/** Syntactic failure while reading a spec file; message carries position. */
class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace rdnet
