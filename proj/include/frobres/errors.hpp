#ifndef FROBRES_ERRORS_HPP
#define FROBRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobres {

// Process exit codes used by the CLI.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_BAD_INPUT = 2,
    EXIT_MATH_INCONSISTENCY = 3,
    EXIT_RESOURCE_CAP = 4,
};

/// Malformed or rejected user input (polynomials, cycle strings, files, ...).
struct BadInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed: inconsistent group/ordering, unsuitable h,
/// corrupt table, zero or multiple vanishing resolvents at a good prime.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured limit was exceeded (group element cap, precision ceiling).
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal control-flow signal: the current floating precision cannot certify
/// the result. Callers double the precision and retry; never escapes the library.
struct PrecisionEscalation {
    std::string reason;
};

} // namespace frobres

#endif
