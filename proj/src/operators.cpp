#include "shapedyn/operators.hpp"

#include <cmath>

namespace shapedyn {

namespace {

void check_step(double h, const WaveFunctionModel& wf) {
    if (h > wf.smoothness_radius)
        throw StepTooLarge("finite-difference step exceeds the wave function smoothness radius");
}

// Central first derivative of a scalar-valued callable along flat coordinate k.
template <typename Fn>
auto central_d1(const Fn& fn, const MassedConfiguration& cfg, int k, double h, int order)
    -> decltype(fn(cfg)) {
    Eigen::VectorXd dx = Eigen::VectorXd::Zero(cfg.dof());
    auto shift = [&](double s) {
        dx[k] = s;
        auto v = fn(cfg.shifted_flat(dx));
        dx[k] = 0.0;
        return v;
    };
    if (order == 4) {
        return (-shift(2 * h) + 8.0 * shift(h) - 8.0 * shift(-h) + shift(-2 * h)) / (12.0 * h);
    }
    return (shift(h) - shift(-h)) / (2.0 * h);
}

template <typename Fn>
auto central_d2(const Fn& fn, const MassedConfiguration& cfg, int k, double h, int order)
    -> decltype(fn(cfg)) {
    Eigen::VectorXd dx = Eigen::VectorXd::Zero(cfg.dof());
    auto shift = [&](double s) {
        dx[k] = s;
        auto v = fn(cfg.shifted_flat(dx));
        dx[k] = 0.0;
        return v;
    };
    if (order == 4) {
        return (-shift(2 * h) + 16.0 * shift(h) - 30.0 * fn(cfg) + 16.0 * shift(-h) -
                shift(-2 * h)) /
               (12.0 * h * h);
    }
    return (shift(h) - 2.0 * fn(cfg) + shift(-h)) / (h * h);
}

}  // namespace

Eigen::VectorXcd fd_gradient(const WaveFunctionModel& wf, const MassedConfiguration& cfg,
                             const FDScheme& scheme) {
    const int dof = cfg.dof();
    double h = scheme.step_rel * config_scale(cfg);
    check_step(h, wf);
    Eigen::VectorXcd g(dof);
    for (int k = 0; k < dof; ++k) {
        g[k] = central_d1(wf.evaluator, cfg, k, h, scheme.order);
        if (scheme.richardson && scheme.order == 2) {
            Complex fine = central_d1(wf.evaluator, cfg, k, 0.5 * h, 2);
            g[k] = (4.0 * fine - g[k]) / 3.0;
        }
    }
    return g;
}

Complex weighted_divgrad(const std::function<double(const MassedConfiguration&)>& weight,
                         const WaveEvaluator& psi, const MassedConfiguration& cfg,
                         const FDScheme& scheme) {
    const int dof = cfg.dof();
    double scale = config_scale(cfg);
    double h_out = scheme.step_rel * scale;
    double h_in = scheme.inner_step_rel * scale;

    auto evaluate = [&](double ho, double hi) {
        Complex total = 0.0;
        for (int k = 0; k < dof; ++k) {
            auto flux = [&](const MassedConfiguration& p) {
                return weight(p) * central_d1(psi, p, k, hi, scheme.order);
            };
            total += central_d1(flux, cfg, k, ho, scheme.order) / cfg.coord_mass(k);
        }
        return total;
    };

    Complex value = evaluate(h_out, h_in);
    if (scheme.richardson && scheme.order == 2) {
        Complex fine = evaluate(0.5 * h_out, 0.5 * h_in);
        value = (4.0 * fine - value) / 3.0;
    }
    return value;
}

Complex laplace_beltrami_g(const ConformalModel& model, const WaveFunctionModel& wf,
                           const MassedConfiguration& cfg, const FDScheme& scheme) {
    require_regular(cfg, "laplace_beltrami_g");
    check_step(scheme.step_rel * config_scale(cfg), wf);
    const double n = cfg.dof();
    auto weight = [&](const MassedConfiguration& p) {
        return std::pow(conformal_factor(model, p), n / 2.0 - 1.0);
    };
    double f = conformal_factor(model, cfg);
    return std::pow(f, -n / 2.0) * weighted_divgrad(weight, wf.evaluator, cfg, scheme);
}

Complex lifted_shape_laplacian_raw(const ConformalModel& model, const WaveEvaluator& psi,
                                   const MassedConfiguration& cfg, const FDScheme& scheme,
                                   JacobianRoute route) {
    require_regular(cfg, "lifted_shape_laplacian");
    const double n = cfg.dof();
    auto weight = [&, route](const MassedConfiguration& p) {
        return std::pow(conformal_factor(model, p), n / 2.0 - 1.0) /
               jacobian_value(model, p, route);
    };
    double f = conformal_factor(model, cfg);
    double jac = jacobian_value(model, cfg, route);
    return jac * std::pow(f, -n / 2.0) * weighted_divgrad(weight, psi, cfg, scheme);
}

Complex lifted_shape_laplacian(const ConformalModel& model, const WaveFunctionModel& wf,
                               const MassedConfiguration& cfg, const FDScheme& scheme,
                               JacobianRoute route) {
    if (wf.gauge != Gauge::G1)
        throw GaugeMismatch("lifted_shape_laplacian: requires an invariant (G1) wave function");
    check_step(scheme.step_rel * config_scale(cfg), wf);
    return lifted_shape_laplacian_raw(model, wf.evaluator, cfg, scheme, route);
}

Complex flat_laplacian(const WaveEvaluator& psi, const MassedConfiguration& cfg,
                       const FDScheme& scheme) {
    const int dof = cfg.dof();
    double h = scheme.step_rel * config_scale(cfg);
    auto evaluate = [&](double step) {
        Complex total = 0.0;
        for (int k = 0; k < dof; ++k)
            total += central_d2(psi, cfg, k, step, scheme.order) / cfg.coord_mass(k);
        return total;
    };
    Complex value = evaluate(h);
    if (scheme.richardson && scheme.order == 2) {
        Complex fine = evaluate(0.5 * h);
        value = (4.0 * fine - value) / 3.0;
    }
    return value;
}

double potential_V1(const ConformalModel& model, const MassedConfiguration& cfg,
                    const FDScheme& scheme, JacobianRoute route) {
    auto root_jac = [&, route](const MassedConfiguration& p) {
        return Complex(std::sqrt(jacobian_value(model, p, route)), 0.0);
    };
    Complex lift = lifted_shape_laplacian_raw(model, root_jac, cfg, scheme, route);
    double denom = std::sqrt(jacobian_value(model, cfg, route));
    return -0.5 * lift.real() / denom;
}

double potential_V2(const ConformalModel& model, const MassedConfiguration& cfg,
                    const FDScheme& scheme) {
    const double n = cfg.dof();
    auto fn = [&](const MassedConfiguration& p) {
        return Complex(std::pow(conformal_factor(model, p), -n / 4.0), 0.0);
    };
    WaveFunctionModel wf = WaveFunctionModel::with_gauge(fn, Gauge::G1);
    Complex lap = laplace_beltrami_g(model, wf, cfg, scheme);
    return -0.5 * std::pow(conformal_factor(model, cfg), n / 4.0) * lap.real();
}

double scalar_curvature(const ConformalModel& model, const MassedConfiguration& cfg,
                        const FDScheme& scheme) {
    const double n = cfg.dof();
    double expo = (n - 2.0) / 4.0;
    auto fn = [&](const MassedConfiguration& p) {
        return Complex(std::pow(conformal_factor(model, p), -expo), 0.0);
    };
    WaveFunctionModel wf = WaveFunctionModel::with_gauge(fn, Gauge::G1);
    Complex lap = laplace_beltrami_g(model, wf, cfg, scheme);
    return 4.0 * (n - 1.0) / (n - 2.0) * std::pow(conformal_factor(model, cfg), expo) * lap.real();
}

double potential_U(const ConformalModel& model, const MassedConfiguration& cfg,
                   const FDScheme& scheme, double energy_const, JacobianRoute route) {
    const double n = cfg.dof();
    double f = conformal_factor(model, cfg);
    double v1 = potential_V1(model, cfg, scheme, route);
    double rg = scalar_curvature(model, cfg, scheme);
    return f * (v1 - energy_const) - 0.125 * (n - 2.0) / (n - 1.0) * f * rg;
}

Complex hamiltonian_apply(Gauge gauge, const ConformalModel& model, const WaveFunctionModel& wf,
                          const MassedConfiguration& cfg, const FDScheme& scheme,
                          double energy_const, JacobianRoute route) {
    if (wf.gauge != gauge)
        throw GaugeMismatch("hamiltonian_apply: wave function tag does not match the gauge");
    switch (gauge) {
        case Gauge::G1:
            return -0.5 * lifted_shape_laplacian(model, wf, cfg, scheme, route);
        case Gauge::G2: {
            Complex lap = laplace_beltrami_g(model, wf, cfg, scheme);
            return -0.5 * lap + potential_V1(model, cfg, scheme, route) * wf(cfg);
        }
        case Gauge::G3: {
            auto weight = [&](const MassedConfiguration& p) {
                return 1.0 / conformal_factor(model, p);
            };
            Complex kin = -0.5 * weighted_divgrad(weight, wf.evaluator, cfg, scheme);
            double v = potential_V1(model, cfg, scheme, route) + potential_V2(model, cfg, scheme);
            return kin + v * wf(cfg);
        }
        case Gauge::Schroedinger: {
            Complex kin = -0.5 * flat_laplacian(wf.evaluator, cfg, scheme);
            return kin + potential_U(model, cfg, scheme, energy_const, route) * wf(cfg);
        }
    }
    throw ConfigError("hamiltonian_apply: unknown gauge");
}

std::vector<PdoCheckPoint> pdo_difference_check(const PointOperator& opA, const PointOperator& opB,
                                                const std::vector<WaveEvaluator>& testfns,
                                                const std::vector<MassedConfiguration>& points) {
    if (testfns.empty()) throw ConfigError("pdo_difference_check: needs test functions");
    WaveEvaluator one = [](const MassedConfiguration&) { return Complex(1.0, 0.0); };
    std::vector<PdoCheckPoint> out;
    out.reserve(points.size());
    for (const auto& q : points) {
        PdoCheckPoint pt;
        std::vector<Complex> values;
        values.reserve(testfns.size());
        for (const auto& fn : testfns) {
            Complex psi = fn(q);
            if (std::abs(psi) < 1e-12)
                throw ConfigError("pdo_difference_check: test function vanishes at a probe point");
            values.push_back((opB(fn, q) - opA(fn, q)) / psi);
        }
        Complex mean = 0.0;
        for (auto v : values) mean += v;
        mean /= double(values.size());
        double spread = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                spread = std::max(spread, std::abs(values[i] - values[j]));
        pt.mean_difference = mean;
        pt.function_spread = spread;
        pt.op_b_on_one = opB(one, q);
        out.push_back(pt);
    }
    return out;
}

Complex chart_laplace_beltrami(const ConformalModel& model,
                               const std::function<Complex(std::complex<double>)>& fn,
                               const ShapePoint& z, const Eigen::VectorXd& masses, double h) {
    // (1/sqrt(det G)) d_i ( sqrt(det G) G^{ij} d_j F ) with nested central
    // differences in the chart.
    auto metric = [&](std::complex<double> w) {
        return pullback_shape_metric(model, ShapePoint(w), masses);
    };
    auto dirs = [h](int i) {
        return i == 0 ? std::complex<double>(h, 0.0) : std::complex<double>(0.0, h);
    };
    auto flux = [&](std::complex<double> w, int i) {
        Eigen::Matrix2d g = metric(w);
        double sq = std::sqrt(g.determinant());
        Eigen::Matrix2d ginv = g.inverse();
        Complex df[2];
        for (int j = 0; j < 2; ++j) df[j] = (fn(w + dirs(j)) - fn(w - dirs(j))) / (2.0 * h);
        return sq * (ginv(i, 0) * df[0] + ginv(i, 1) * df[1]);
    };
    Complex total = 0.0;
    for (int i = 0; i < 2; ++i)
        total += (flux(z.z + dirs(i), i) - flux(z.z - dirs(i), i)) / (2.0 * h);
    Eigen::Matrix2d g0 = metric(z.z);
    return total / std::sqrt(g0.determinant());
}

}  // namespace shapedyn
