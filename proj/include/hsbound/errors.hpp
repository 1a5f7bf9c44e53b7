#pragma once

#include <stdexcept>
#include <string>

namespace hsbound {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sample construction rejected the input (n < 2, non-finite values).
struct InvalidSample : Error {
    using Error::Error;
};

/// Operation requires positive spread but the data is constant (sd = 0).
struct DegenerateSample : Error {
    using Error::Error;
};

/// Sample size outside the operation's domain.
struct InvalidN : Error {
    using Error::Error;
};

/// Order-statistic index outside [1, n].
struct InvalidIndex : Error {
    using Error::Error;
};

/// Two-block low-block size outside [1, n-1].
struct InvalidJ : Error {
    using Error::Error;
};

/// Rescale factor must be strictly positive.
struct InvalidScale : Error {
    using Error::Error;
};

/// Search parameters out of range (restarts < 1, iters < 0).
struct InvalidParams : Error {
    using Error::Error;
};

/// n_min/n_max pair does not describe a valid range.
struct InvalidRange : Error {
    using Error::Error;
};

/// (p, q) violates p > 0, q > 0, p + q <= 1.
struct InvalidSplit : Error {
    using Error::Error;
};

/// Standardized vector has no strictly negative or no strictly positive entry.
struct NoSignChange : Error {
    using Error::Error;
};

/// Even-n classification applied to an odd-length vector.
struct OddN : Error {
    using Error::Error;
};

/// Discrete distribution construction rejected the atoms.
struct InvalidDistribution : Error {
    using Error::Error;
};

/// Discrete distribution has zero variance.
struct ZeroVariance : Error {
    using Error::Error;
};

/// All probability mass sits on one side of the mean (p = 0 or q = 0).
struct MeanAtomExhaustive : Error {
    using Error::Error;
};

/// Malformed numeric input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace hsbound
