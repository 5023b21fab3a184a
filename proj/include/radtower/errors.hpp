#pragma once

#include <stdexcept>
#include <string>

namespace radtower {

// Base class for all library failures that a caller can act on.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments / violated preconditions.
struct InvalidParams : Error {
    using Error::Error;
};

// Element-text parsing.
struct SyntaxError : InvalidParams {
    using InvalidParams::InvalidParams;
};
struct ExponentOutOfRange : InvalidParams {
    using InvalidParams::InvalidParams;
};
struct UnknownVariable : InvalidParams {
    using InvalidParams::InvalidParams;
};

// Domain errors on values.
struct ZeroElement : InvalidParams {
    using InvalidParams::InvalidParams;
};
struct ZeroTuple : InvalidParams {
    using InvalidParams::InvalidParams;
};
struct DegreeTooLarge : InvalidParams {
    using InvalidParams::InvalidParams;
};
struct NotInTopGenerator : InvalidParams {
    using InvalidParams::InvalidParams;
};
struct InvalidStep : InvalidParams {
    using InvalidParams::InvalidParams;
};
struct EmptyTower : InvalidParams {
    using InvalidParams::InvalidParams;
};

// Numerics: requested tolerance not reachable below the precision ceiling.
struct PrecisionFailure : Error {
    using Error::Error;
};
struct NonConvergence : PrecisionFailure {
    using PrecisionFailure::PrecisionFailure;
};
// Embedding values could not be separated at the precision ceiling.
struct Indeterminate : PrecisionFailure {
    using PrecisionFailure::PrecisionFailure;
};

// Constructions: a finite prime scan ran out of candidates.  This is a
// legitimate runtime outcome, not a bug (existence is only asymptotic).
struct SearchExhausted : Error {
    using Error::Error;
};

// Oracle enumeration guards.
struct TooLarge : Error {
    using Error::Error;
};
struct EmptyStream : Error {
    using Error::Error;
};

// Certificate I/O.
struct MalformedCertificate : Error {
    using Error::Error;
};

}  // namespace radtower
