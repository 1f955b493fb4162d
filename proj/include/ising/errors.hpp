#pragma once

#include <stdexcept>
#include <string>

namespace ising {

// Argument violates an operation's contract (mismatched sizes, overlapping
// constraint sets, inadmissible evaluation point, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input exceeds an enumeration cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// A graph construction would violate simplicity (self-loop from an
// identification, bad edge endpoint, ...).
struct ConstructionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Duplicate abscissae or inconsistent data handed to an interpolation.
struct InterpolationError : std::domain_error {
    using std::domain_error::domain_error;
};

// An evaluation hit a zero denominator or an otherwise excluded point.
struct DegeneratePointError : std::domain_error {
    using std::domain_error::domain_error;
};

// A quantity that must be rational came out with a nonzero radical or
// imaginary component.  Always indicates a bug, never bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ising
