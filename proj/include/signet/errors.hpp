#ifndef SIGNET_ERRORS_HPP
#define SIGNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace signet {

/// Precondition violated by the caller (bad dimensions, invalid graph, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The graph violates the structural hypotheses of the requested certificate.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spectrum cannot be split cleanly at the zero tolerance.
struct AmbiguousSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wrong solver for this edge Laplacian; the message names the right one.
struct WrongTheoremError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scenario text error with a 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Non-finite state or other failure during integration.
struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace signet

#endif
