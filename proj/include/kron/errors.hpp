#pragma once

#include <stdexcept>
#include <string>

namespace kron {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Modulus is zero or composite where a prime is required, two residues carry
// different moduli, or a rational entry has a denominator divisible by the
// modulus.
struct BadPrime : Error {
    using Error::Error;
};

// A partition contains a part < 1.
struct InvalidPart : Error {
    using Error::Error;
};

// A list that must be sorted (weakly decreasing parts, ordered block sizes)
// is not.
struct NotSorted : Error {
    using Error::Error;
};

// Two lists that must have equal length do not.
struct LengthMismatch : Error {
    using Error::Error;
};

// A coefficient or parameter vector has the wrong number of entries.
struct ArityMismatch : Error {
    using Error::Error;
};

// A pencil's spectrum has an eigenvalue that is not rational, so invariants
// over the rationals do not exist.
struct NonSplitSpectrum : Error {
    using Error::Error;
};

// An internal postcondition failed; indicates a bug, not bad input.
struct InternalInconsistency : Error {
    using Error::Error;
};

// The requested closed-form criterion does not cover the given pair of
// representations.
struct CriterionUnavailable : Error {
    using Error::Error;
};

// Malformed textual input (rational literal, JSON document, point name).
struct ParseError : Error {
    using Error::Error;
};

// The closed-form criterion and the randomized check returned different
// verdicts for the same pair.
struct DecisionMismatch : Error {
    using Error::Error;
};

}  // namespace kron
