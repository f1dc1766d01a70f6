#pragma once

#include <stdexcept>

namespace blockade {

/// Invalid user-supplied input (bad partition, grid, norm, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size cap of the brute-force reference path.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed to converge or produced an inconsistent result.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace blockade
