#include "shapedyn/wavefunction.hpp"

#include <cmath>

namespace shapedyn {

const char* gauge_name(Gauge g) {
    switch (g) {
        case Gauge::G1: return "G1";
        case Gauge::G2: return "G2";
        case Gauge::G3: return "G3";
        case Gauge::Schroedinger: return "S";
    }
    return "?";
}

double jacobian_value(const ConformalModel& model, const MassedConfiguration& cfg,
                      JacobianRoute route) {
    return route == JacobianRoute::Invariant ? shape_jacobian_invariant(model, cfg)
                                             : shape_jacobian(model, cfg);
}

WaveFunctionModel WaveFunctionModel::invariant(WaveEvaluator fn,
                                               const std::vector<MassedConfiguration>& probes,
                                               std::uint64_t probe_seed) {
    CounterRng rng = CounterRng::stream(probe_seed, "wavefunction-invariance-probe");
    for (const auto& cfg : probes) {
        Complex v0 = fn(cfg);
        for (int k = 0; k < 4; ++k) {
            SimilarityTransform t = SimilarityTransform::random(rng);
            Complex vt = fn(apply_similarity(cfg, t));
            if (std::abs(vt - v0) > 1e-8 * (1.0 + std::abs(v0)))
                throw GaugeMismatch("invariant wave function: similarity invariance violated");
        }
    }
    WaveFunctionModel wf;
    wf.evaluator = std::move(fn);
    wf.gauge = Gauge::G1;
    return wf;
}

WaveFunctionModel WaveFunctionModel::with_gauge(WaveEvaluator fn, Gauge g, double radius) {
    WaveFunctionModel wf;
    wf.evaluator = std::move(fn);
    wf.gauge = g;
    wf.smoothness_radius = radius;
    return wf;
}

WaveFunctionModel rescale_wavefunction(
    const WaveFunctionModel& wf, const std::function<double(const MassedConfiguration&)>& factor,
    Gauge new_gauge) {
    WaveFunctionModel out;
    WaveEvaluator base = wf.evaluator;
    out.evaluator = [base, factor](const MassedConfiguration& cfg) {
        return factor(cfg) * base(cfg);
    };
    out.gauge = new_gauge;
    out.smoothness_radius = wf.smoothness_radius;
    return out;
}

double gauge_factor_from_g1(const ConformalModel& model, const MassedConfiguration& cfg, Gauge to,
                            JacobianRoute route) {
    const double n = cfg.dof();
    switch (to) {
        case Gauge::G1:
            return 1.0;
        case Gauge::G2:
            return 1.0 / std::sqrt(jacobian_value(model, cfg, route));
        case Gauge::G3:
            return std::pow(conformal_factor(model, cfg), n / 4.0) /
                   std::sqrt(jacobian_value(model, cfg, route));
        case Gauge::Schroedinger:
            return std::pow(conformal_factor(model, cfg), (n - 2.0) / 4.0) /
                   std::sqrt(jacobian_value(model, cfg, route));
    }
    return 1.0;
}

WaveFunctionModel gauge_transform_wavefunction(const WaveFunctionModel& wf, Gauge from, Gauge to,
                                               const ConformalModel& model, JacobianRoute route) {
    if (wf.gauge != from)
        throw GaugeMismatch("gauge_transform_wavefunction: wave function tag does not match");
    auto factor = [model, route, from, to](const MassedConfiguration& cfg) {
        return gauge_factor_from_g1(model, cfg, to, route) /
               gauge_factor_from_g1(model, cfg, from, route);
    };
    return rescale_wavefunction(wf, factor, to);
}

Complex InvariantTestFunction::operator()(const MassedConfiguration& cfg) const {
    double l2 = scale_moment(cfg);
    auto u = [&](int a, int b) {
        return (cfg.positions.col(a) - cfg.positions.col(b)).squaredNorm() / l2;
    };
    double u01 = u(0, 1), u02 = u(0, 2), u12 = u(1, 2);
    double logmod = -amp_a * (u01 - center_a) * (u01 - center_a) -
                    amp_b * (u02 - center_b) * (u02 - center_b);
    double phase = phase_1 * u01 + phase_2 * u12 + phase_cross * u01 * u02;
    return std::exp(Complex(logmod, phase));
}

WaveEvaluator InvariantTestFunction::evaluator() const {
    InvariantTestFunction copy = *this;
    return [copy](const MassedConfiguration& cfg) { return copy(cfg); };
}

std::vector<InvariantTestFunction> standard_invariant_test_functions() {
    std::vector<InvariantTestFunction> fns(3);
    fns[0] = InvariantTestFunction{};
    fns[1] = InvariantTestFunction{0.6, 1.2, 0.8, 1.4, -0.3, 0.5, 0.1};
    fns[2] = InvariantTestFunction{1.4, 0.4, 1.2, 0.7, 0.2, -0.4, -0.25};
    return fns;
}

}  // namespace shapedyn
