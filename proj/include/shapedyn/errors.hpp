#pragma once

#include <stdexcept>
#include <string>

namespace shapedyn {

// Configuration is collinear/coincident or a required denominator vanished.
struct DegenerateConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-difference step exceeds the evaluable neighbourhood of a wave function.
struct StepTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wave function gauge tag does not match the requested operation.
struct GaugeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |psi| below the node threshold; guiding velocity undefined.
struct NodalPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cannot rescale a velocity to zero total energy (V >= 0 at the start point).
struct NoZeroEnergy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative optimisation failed to reach its tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Conditional wave function vanishes identically on the probe set.
struct ZeroConditional : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tangent vector used with a configuration it is not based at.
struct BaseMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace shapedyn
