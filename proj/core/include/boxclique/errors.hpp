#pragma once

#include <stdexcept>
#include <string>

namespace boxclique {

// Bad parameters or flags (out-of-range vertex, k < 2, unknown option). CLI exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; message carries a line diagnostic. CLI exit 2.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds a hard capability budget (canonical forms above n=16,
// pair enumeration above k=4, oversized search grids). CLI exit 2.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that fails a property the operation requires
// (graph without the clique property, families violating (1)-(5)). CLI exit 1.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace boxclique
