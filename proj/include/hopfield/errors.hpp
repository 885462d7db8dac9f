// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>

namespace hopfield {

// Invalid physical parameter or out-of-domain argument.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// No relaxation channel: the requested steady-state quantity does not exist.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loss of numerical validity that valid inputs cannot produce.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested truncation exceeds the configured dimension cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cutoff-doubling convergence test failed; the value is not trustworthy.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive integrator step size underflowed.
struct StepSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed configuration input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hopfield
