#pragma once

#include <stdexcept>
#include <string>

namespace schursim {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Three spins fail the triangle or parity condition where it is required.
struct TriangleViolation : Error {
    using Error::Error;
};

/// A (j, m) pair is out of domain: |m| > j or mismatched parity.
struct InvalidQuantumNumbers : Error {
    using Error::Error;
};

/// A coupling path or Schur label violates its invariants.
struct InvalidLabel : Error {
    using Error::Error;
};

/// A bitstring and a label (or two bitstrings) disagree on qubit count.
struct LengthMismatch : Error {
    using Error::Error;
};

/// The requested enumeration or dense construction exceeds a size cap.
struct DomainTooLarge : Error {
    using Error::Error;
};

/// A conditional bias was requested for a suffix of probability zero.
struct ZeroConditioning : Error {
    using Error::Error;
};

/// A diagonal phase oracle returned a value off the unit circle.
struct PhaseNotUnit : Error {
    using Error::Error;
};

/// A circuit fails structural validation.
struct InvalidCircuit : Error {
    using Error::Error;
};

/// The transposition index is out of range for the qubit count.
struct InvalidTransposition : Error {
    using Error::Error;
};

/// An estimator parameter is out of range (epsilon <= 0, delta outside (0,1), ...).
struct InvalidParameters : Error {
    using Error::Error;
};

/// A per-draw bound that must hold by construction was violated; indicates
/// an implementation bug upstream, not bad user input.
struct BoundViolation : Error {
    using Error::Error;
};

/// Malformed textual/JSON input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace schursim
