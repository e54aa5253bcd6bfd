#pragma once

#include <stdexcept>
#include <string>

namespace phaselock {

// Bad arguments, grids, ranges. The CLI maps these to exit code 2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failures: divergence, overflow, conditioning. CLI exit code 3.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation at or too close to a pole of a special function.
struct singularity_error : numerical_error {
    using numerical_error::numerical_error;
};

// A quotient whose denominator is numerically zero; message names the factor.
struct conditioning_error : numerical_error {
    using numerical_error::numerical_error;
};

}  // namespace phaselock
