#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "shapedyn/bundle.hpp"
#include "shapedyn/conformal.hpp"

namespace shapedyn {

using Complex = std::complex<double>;
using WaveEvaluator = std::function<Complex(const MassedConfiguration&)>;

// Wave-function representations along the gauge chain. G1 is the invariant
// lift of a shape wave function; G2 and G3 are its rescalings by the shape
// Jacobian and the conformal density; Schroedinger is the flat-Laplacian
// representation.
enum class Gauge { G1, G2, G3, Schroedinger };

const char* gauge_name(Gauge g);

// Two shape Jacobian conventions enter the gauge chain: the density
// L f^{7/2} sqrt(det M) and its similarity-invariant multiple L^3 times that.
// Both define lifts of the shape Laplacian; the invariant one keeps the
// first gauge potential constant on fibers and is the default everywhere.
enum class JacobianRoute { Invariant, Plain };

double jacobian_value(const ConformalModel& model, const MassedConfiguration& cfg,
                      JacobianRoute route);

struct WaveFunctionModel {
    WaveEvaluator evaluator;
    Gauge gauge = Gauge::G1;
    double smoothness_radius = 1e9;  // evaluable ball for finite differences

    Complex operator()(const MassedConfiguration& cfg) const { return evaluator(cfg); }

    // G1 factory with a similarity-invariance self-test on probe points.
    static WaveFunctionModel invariant(WaveEvaluator fn,
                                       const std::vector<MassedConfiguration>& probes,
                                       std::uint64_t probe_seed = 11);
    static WaveFunctionModel with_gauge(WaveEvaluator fn, Gauge g, double radius = 1e9);
};

// Centered finite-difference parameters; steps are relative to the
// configuration scale L.
struct FDScheme {
    double step_rel = 1e-3;        // outer derivatives
    double inner_step_rel = 1e-4;  // nested inner derivatives
    int order = 2;                 // 2 or 4
    bool richardson = false;

    FDScheme halved() const {
        FDScheme s = *this;
        s.step_rel *= 0.5;
        s.inner_step_rel *= 0.5;
        return s;
    }
};

// Multiply a wave function pointwise by a positive factor, retagging gauge.
WaveFunctionModel rescale_wavefunction(const WaveFunctionModel& wf,
                                       const std::function<double(const MassedConfiguration&)>& factor,
                                       Gauge new_gauge);

// Gauge transport along the chain: G2 = J^{-1/2} G1, G3 = f^{n/4} G2,
// S = f^{(n-2)/4} G2. All compositions and inverses are supported.
WaveFunctionModel gauge_transform_wavefunction(const WaveFunctionModel& wf, Gauge from, Gauge to,
                                               const ConformalModel& model,
                                               JacobianRoute route = JacobianRoute::Invariant);

// Accumulated factor taking a G1 wave function to the given gauge.
double gauge_factor_from_g1(const ConformalModel& model, const MassedConfiguration& cfg, Gauge to,
                            JacobianRoute route = JacobianRoute::Invariant);

// Smooth similarity-invariant test functions built from normalized pair
// distances; used across the operator checks.
struct InvariantTestFunction {
    double amp_a = 1.0, amp_b = 0.7;
    double center_a = 1.0, center_b = 1.0;
    double phase_1 = 0.4, phase_2 = 0.3, phase_cross = 0.2;

    Complex operator()(const MassedConfiguration& cfg) const;
    WaveEvaluator evaluator() const;
};

std::vector<InvariantTestFunction> standard_invariant_test_functions();

}  // namespace shapedyn
