#pragma once

#include <stdexcept>
#include <string>

namespace lifemoments {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CSV input could not be parsed (bad header, bad row, non-numeric value).
class MalformedCsv : public Error {
public:
    using Error::Error;
};

/// Survivor counts increase between consecutive ages.
class NonMonotone : public Error {
public:
    using Error::Error;
};

/// Table ages are not consecutive integers.
class NonConsecutiveAges : public Error {
public:
    using Error::Error;
};

/// Table contains no rows.
class EmptyTable : public Error {
public:
    using Error::Error;
};

/// An age, index, or parameter lies outside the supported range.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// A probability is conditioned on an age with zero survivors.
class ZeroExposure : public Error {
public:
    using Error::Error;
};

/// A whole-life computation was requested on a table whose survivor
/// counts never reach zero and no terminal age was forced.
class InsufficientTable : public Error {
public:
    using Error::Error;
};

/// The Balducci interpolation is undefined on a year with one-year
/// death probability equal to 1.
class BalducciDegenerate : public Error {
public:
    using Error::Error;
};

/// The constant-force density does not exist as a finite function on a
/// year with one-year survival probability equal to 0; callers must use
/// the closed-form limit branches instead.
class DegenerateYear : public Error {
public:
    using Error::Error;
};

/// An ordering check was requested for a payoff that does not declare a
/// monotone direction.
class MixedMonotonicity : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not meet the error tolerance within its
/// subdivision budget.
class NonConvergent : public Error {
public:
    using Error::Error;
};

/// A requested order exceeds the range representable without precision
/// loss (factorials, discount powers).
class Overflow : public Error {
public:
    using Error::Error;
};

} // namespace lifemoments
