#pragma once

#include <stdexcept>
#include <string>

namespace epc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Caller handed in something outside the operation's domain.
struct PreconditionError : Error {
    using Error::Error;
};

// A guarantee the algorithm relies on did not hold. Always a bug or a
// broken instance invariant; never silently recovered in production mode.
struct DefectError : Error {
    using Error::Error;
};

// The instance violates a structural property that the anchor's
// preconditions imply (e.g. two disjoint tracks inside a petal-free zone).
struct InvariantBreach : DefectError {
    using DefectError::DefectError;
};

struct GuardError : Error {
    using Error::Error;
};

}  // namespace epc
