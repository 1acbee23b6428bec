#pragma once

#include <stdexcept>

namespace cvqkd {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Fock-space truncation cannot hold the requested state to tolerance.
struct TruncationTooSmall : Error {
    using Error::Error;
};

// Post-selection removed (numerically) all probability mass.
struct ZeroAcceptance : Error {
    using Error::Error;
};

// Root bracket endpoints have the same sign.
struct NoSignChange : Error {
    using Error::Error;
};

// An integrand sample evaluated to NaN or infinity.
struct NonFiniteSample : Error {
    using Error::Error;
};

// Parameter outside the supported domain (factorial bound, bad ranges, ...).
struct DomainError : Error {
    using Error::Error;
};

// The requested state has zero norm (photon subtraction annihilated it).
struct DegenerateState : Error {
    using Error::Error;
};

// A runtime numerical self-check failed (negative density beyond the
// clamping tolerance, grossly non-normalized distribution, ...).
struct AuditFailure : Error {
    using Error::Error;
};

// Invalid run configuration; the message names the offending field.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace cvqkd
