#pragma once

#include <stdexcept>
#include <string>

namespace curvecount {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// poly_div_exact was asked for an integer-coefficient result it cannot give,
// or the divisor is zero.
struct NonExactDivision : Error {
    using Error::Error;
};

// c1_of called on a rank-2 bundle spec.
struct NotLineBundle : Error {
    using Error::Error;
};

// Base-table load: required manifest keys absent.  The message lists every
// missing key, not just the first.
struct MissingKey : Error {
    using Error::Error;
};

// Base-table load: structurally malformed JSON (bad target name, out-of-range
// n/m, non-integer coefficient string, missing field, duplicate key, ...).
struct SchemaError : Error {
    using Error::Error;
};

// Base-table load: the stored nodal rows disagree with the closed form
// (3(d-1)^2, 3(d-1), 1) they are required to equal.
struct A1Mismatch : Error {
    using Error::Error;
};

// A derivation was requested in a pairing mode that does not apply to it.
struct UnsupportedMode : Error {
    using Error::Error;
};

// Violated call precondition (negative n or m, lambda level on a target that
// has none, unknown name lookup, un-normalized input where normalized is
// required, ...).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace curvecount
