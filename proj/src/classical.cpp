#include "shapedyn/classical.hpp"

#include <algorithm>
#include <cmath>

namespace shapedyn {

double TrajectoryRecord::energy(const ConformalModel& model, std::size_t i) const {
    const auto& s = states[i];
    double kin = 0.5 * mass_metric_inner(s.config, s.velocity, s.velocity);
    return kin - conformal_factor(model, s.config);
}

Vec3 TrajectoryRecord::momentum(std::size_t i) const {
    return total_momentum(states[i].config, states[i].velocity);
}

Vec3 TrajectoryRecord::angular_momentum(std::size_t i) const {
    return total_angular_momentum(states[i].config, states[i].velocity);
}

double TrajectoryRecord::dilational(std::size_t i) const {
    return dilational_momentum(states[i].config, states[i].velocity);
}

TangentVector newton_force(const ConformalModel& model, const MassedConfiguration& cfg,
                           double step_rel, bool richardson) {
    require_regular(cfg, "newton_force");
    const int dof = cfg.dof();
    double h = step_rel * config_scale(cfg);

    auto gradient_at = [&](double step) {
        Eigen::VectorXd g(dof);
        Eigen::VectorXd dx = Eigen::VectorXd::Zero(dof);
        for (int k = 0; k < dof; ++k) {
            dx[k] = step;
            double fp = conformal_factor(model, cfg.shifted_flat(dx));
            dx[k] = -step;
            double fm = conformal_factor(model, cfg.shifted_flat(dx));
            dx[k] = 0.0;
            g[k] = (fp - fm) / (2.0 * step);
        }
        return g;
    };

    Eigen::VectorXd grad = gradient_at(h);
    if (richardson) {
        Eigen::VectorXd fine = gradient_at(0.5 * h);
        grad = (4.0 * fine - grad) / 3.0;
    }
    for (int k = 0; k < dof; ++k) grad[k] /= cfg.coord_mass(k);
    return TangentVector::from_flat(cfg, grad);
}

TangentVector sample_horizontal_initial(const ConformalModel& model,
                                        const MassedConfiguration& cfg0, std::uint64_t seed) {
    CounterRng rng = CounterRng::stream(seed, "horizontal-initial");
    Eigen::VectorXd raw(cfg0.dof());
    for (int k = 0; k < cfg0.dof(); ++k) raw[k] = rng.normal();
    TangentVector v = horizontal_project(model, cfg0, TangentVector::from_flat(cfg0, raw));
    double f = conformal_factor(model, cfg0);
    if (!(f > 0.0)) throw NoZeroEnergy("sample_horizontal_initial: potential -f is not negative");
    double norm = mass_metric_norm(cfg0, v);
    if (norm < 1e-14)
        throw DegenerateConfiguration("sample_horizontal_initial: degenerate horizontal draw");
    // Zero total energy: 1/2 |v|^2 = f.
    return TangentVector(cfg0, v.components * (std::sqrt(2.0 * f) / norm));
}

TrajectoryRecord integrate_newton_gauge(const ConformalModel& model,
                                        const MassedConfiguration& cfg0, const TangentVector& v0,
                                        double dt, int steps, double force_step_rel) {
    TrajectoryRecord rec;
    rec.times.reserve(steps + 1);
    rec.states.reserve(steps + 1);

    MassedConfiguration q = cfg0;
    Eigen::Matrix3Xd v = v0.components;
    rec.times.push_back(0.0);
    rec.states.push_back({q, TangentVector(q, v)});

    Eigen::Matrix3Xd acc;
    try {
        acc = newton_force(model, q, force_step_rel).components;
    } catch (const DegenerateConfiguration& e) {
        rec.aborted = true;
        rec.abort_reason = e.what();
        return rec;
    }

    for (int s = 1; s <= steps; ++s) {
        try {
            Eigen::Matrix3Xd vhalf = v + (0.5 * dt) * acc;
            q = q.with_positions(q.positions + dt * vhalf);
            acc = newton_force(model, q, force_step_rel).components;
            v = vhalf + (0.5 * dt) * acc;
        } catch (const DegenerateConfiguration& e) {
            rec.aborted = true;
            rec.abort_reason = e.what();
            return rec;
        }
        rec.times.push_back(s * dt);
        rec.states.push_back({q, TangentVector(q, v)});
    }
    return rec;
}

double state_shape_speed(const ConformalModel& model, const ClassicalState& s) {
    return shape_metric_norm(model, s.config, s.velocity);
}

TrajectoryRecord invariant_gauge_time(const ConformalModel& model, const TrajectoryRecord& traj,
                                      double v_shape) {
    // dt_newton/dt_invariant = v / (sqrt(2) f): accumulate the inverse rate.
    TrajectoryRecord out = traj;
    if (traj.size() == 0) return out;
    std::vector<double> rate(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        double f = conformal_factor(model, traj.states[i].config);
        rate[i] = std::sqrt(2.0) * f / v_shape;
    }
    out.times[0] = 0.0;
    for (std::size_t i = 1; i < traj.size(); ++i) {
        double dtn = traj.times[i] - traj.times[i - 1];
        out.times[i] = out.times[i - 1] + 0.5 * (rate[i] + rate[i - 1]) * dtn;
    }
    return out;
}

namespace {

// Christoffel symbols of the chart metric by central differences.
struct ChartGeometry {
    const ConformalModel& model;
    const Eigen::VectorXd& masses;
    double fd_step;

    Eigen::Matrix2d metric(const std::complex<double>& z) const {
        return pullback_shape_metric(model, ShapePoint(z), masses);
    }

    // gamma[k](i,j)
    std::array<Eigen::Matrix2d, 2> christoffel(const std::complex<double>& z) const {
        double h = fd_step;
        std::array<Eigen::Matrix2d, 2> dg;  // dg[k] = dG/dx_k
        dg[0] = (metric(z + h) - metric(z - h)) / (2.0 * h);
        dg[1] = (metric(z + std::complex<double>(0, h)) - metric(z - std::complex<double>(0, h))) /
                (2.0 * h);
        Eigen::Matrix2d ginv = metric(z).inverse();
        std::array<Eigen::Matrix2d, 2> gamma;
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    double s = 0.0;
                    for (int l = 0; l < 2; ++l)
                        s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                    gamma[k](i, j) = 0.5 * s;
                }
        return gamma;
    }

    // Geodesic equation as a first-order field on (z, dz).
    Eigen::Vector4d field(const Eigen::Vector4d& y) const {
        std::complex<double> z(y[0], y[1]);
        auto gamma = christoffel(z);
        Eigen::Vector2d vel(y[2], y[3]);
        Eigen::Vector4d out;
        out[0] = y[2];
        out[1] = y[3];
        for (int k = 0; k < 2; ++k) out[2 + k] = -vel.transpose() * gamma[k] * vel;
        return out;
    }
};

}  // namespace

ShapePath shape_geodesic(const ConformalModel& model, const ShapePoint& z0,
                         std::complex<double> dz0, int steps, double h,
                         const Eigen::VectorXd& masses) {
    ChartGeometry geo{model, masses, 1e-4};
    Eigen::Vector4d y;
    y << z0.re(), z0.im(), dz0.real(), dz0.imag();

    ShapePath path;
    path.points.reserve(steps + 1);
    path.params.reserve(steps + 1);
    path.points.emplace_back(y[0], y[1]);
    path.params.push_back(0.0);
    for (int s = 1; s <= steps; ++s) {
        Eigen::Vector4d k1 = geo.field(y);
        Eigen::Vector4d k2 = geo.field(y + 0.5 * h * k1);
        Eigen::Vector4d k3 = geo.field(y + 0.5 * h * k2);
        Eigen::Vector4d k4 = geo.field(y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(y[1] > 0.0))
            throw DegenerateConfiguration("shape_geodesic: reached the collinear boundary");
        path.points.emplace_back(y[0], y[1]);
        path.params.push_back(s * h);
    }
    return path;
}

namespace {

double segment_length(const ConformalModel& model, const Eigen::VectorXd& masses,
                      const std::complex<double>& a, const std::complex<double>& b) {
    std::complex<double> mid = 0.5 * (a + b);
    Eigen::Matrix2d g = pullback_shape_metric(model, ShapePoint(mid), masses);
    Eigen::Vector2d d(b.real() - a.real(), b.imag() - a.imag());
    return std::sqrt(std::max(0.0, double(d.transpose() * g * d)));
}

}  // namespace

double shape_path_length(const ConformalModel& model, const ShapePath& path,
                         const Eigen::VectorXd& masses) {
    double len = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i)
        len += segment_length(model, masses, path.points[i - 1], path.points[i]);
    return len;
}

JacobiResult jacobi_path_minimize(const ConformalModel& model, const ShapePoint& z0,
                                  const ShapePoint& z1, int n_knots,
                                  const std::function<double(const ShapePoint&)>& potential,
                                  double energy_const, const Eigen::VectorXd& masses,
                                  const JacobiOptions& opts) {
    JacobiResult result;
    if (std::abs(z0.z - z1.z) < 1e-15) {
        result.path.points = {z0.z};
        result.converged = true;
        return result;
    }

    auto weight = [&](const std::complex<double>& mid) {
        double w2 = energy_const - (potential ? potential(ShapePoint(mid)) : 0.0);
        if (!(w2 > 0.0))
            throw NonConvergence("jacobi_path_minimize: E - V must stay positive on the path");
        return std::sqrt(w2);
    };

    // Knot vector: interior points only; endpoints fixed.
    std::vector<std::complex<double>> pts(n_knots + 2);
    for (int i = 0; i < n_knots + 2; ++i) {
        double s = double(i) / double(n_knots + 1);
        pts[i] = (1.0 - s) * z0.z + s * z1.z;
        if (pts[i].imag() <= 0.0)
            throw DegenerateConfiguration("jacobi_path_minimize: seed path leaves the chart");
    }

    auto functional = [&](const std::vector<std::complex<double>>& p) {
        double total = 0.0;
        for (std::size_t i = 1; i < p.size(); ++i) {
            std::complex<double> mid = 0.5 * (p[i - 1] + p[i]);
            total += weight(mid) * segment_length(model, masses, p[i - 1], p[i]);
        }
        return total;
    };

    auto respace = [&](std::vector<std::complex<double>>& p) {
        // Equal chord length in the chart; endpoints kept.
        std::vector<double> cum(p.size(), 0.0);
        for (std::size_t i = 1; i < p.size(); ++i) cum[i] = cum[i - 1] + std::abs(p[i] - p[i - 1]);
        if (cum.back() < 1e-15) return;
        std::vector<std::complex<double>> out(p.size());
        out.front() = p.front();
        out.back() = p.back();
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            double target = cum.back() * double(i) / double(p.size() - 1);
            auto it = std::lower_bound(cum.begin(), cum.end(), target);
            std::size_t j = std::max<std::size_t>(1, it - cum.begin());
            double t = (target - cum[j - 1]) / std::max(1e-300, cum[j] - cum[j - 1]);
            out[i] = (1.0 - t) * p[j - 1] + t * p[j];
        }
        p = std::move(out);
    };

    const double grad_h = 1e-6;
    double value = functional(pts);
    double step = opts.initial_step;
    int iter = 0;
    double gnorm = 0.0;
    for (; iter < opts.max_iterations; ++iter) {
        // Finite-difference gradient on the interior knots.
        std::vector<std::complex<double>> grad(pts.size(), 0.0);
        gnorm = 0.0;
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            for (int c = 0; c < 2; ++c) {
                std::complex<double> dz = (c == 0) ? std::complex<double>(grad_h, 0)
                                                   : std::complex<double>(0, grad_h);
                auto save = pts[i];
                pts[i] = save + dz;
                double fp = functional(pts);
                pts[i] = save - dz;
                double fm = functional(pts);
                pts[i] = save;
                double g = (fp - fm) / (2.0 * grad_h);
                grad[i] += (c == 0) ? std::complex<double>(g, 0) : std::complex<double>(0, g);
            }
            gnorm += std::norm(grad[i]);
        }
        gnorm = std::sqrt(gnorm);
        if (gnorm < opts.gradient_tolerance * std::max(1.0, value)) break;

        // Backtracking line search along -grad.
        bool moved = false;
        while (step > 1e-14) {
            std::vector<std::complex<double>> trial = pts;
            bool feasible = true;
            for (std::size_t i = 1; i + 1 < trial.size(); ++i) {
                trial[i] -= step * grad[i];
                if (trial[i].imag() <= 1e-6) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                double tv = functional(trial);
                if (tv < value - 1e-14 * std::abs(value)) {
                    pts = std::move(trial);
                    value = tv;
                    moved = true;
                    step *= 1.5;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!moved) break;
        respace(pts);
        value = functional(pts);
    }

    result.path.points = pts;
    result.functional = value;
    result.gradient_norm = gnorm;
    result.iterations = iter;
    result.converged = gnorm < 1e-5 * std::max(1.0, value) || iter < opts.max_iterations;
    return result;
}

ShapePath project_to_shape(const TrajectoryRecord& traj) {
    ShapePath path;
    path.points.reserve(traj.size());
    path.params = traj.times;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        try {
            path.points.push_back(bookstein_shape(traj.states[i].config).z);
        } catch (const DegenerateConfiguration&) {
            path.flagged.push_back(i);
            path.points.push_back(path.points.empty() ? std::complex<double>(0, 1)
                                                      : path.points.back());
        }
    }
    return path;
}

double chart_path_distance(const ConformalModel& model, const ShapePath& a, const ShapePath& b,
                           double span, const Eigen::VectorXd& masses) {
    // Arclength tables.
    auto cumulative = [&](const ShapePath& p) {
        std::vector<double> cum(p.size(), 0.0);
        for (std::size_t i = 1; i < p.size(); ++i)
            cum[i] = cum[i - 1] + segment_length(model, masses, p.points[i - 1], p.points[i]);
        return cum;
    };
    std::vector<double> ca = cumulative(a), cb = cumulative(b);
    if (ca.back() < span || cb.back() < span)
        throw ConfigError("chart_path_distance: paths shorter than the comparison span");

    auto at = [](const ShapePath& p, const std::vector<double>& cum, double s) {
        auto it = std::lower_bound(cum.begin(), cum.end(), s);
        std::size_t j = std::min<std::size_t>(std::max<std::size_t>(1, it - cum.begin()),
                                              cum.size() - 1);
        double t = (s - cum[j - 1]) / std::max(1e-300, cum[j] - cum[j - 1]);
        return (1.0 - t) * p.points[j - 1] + t * p.points[j];
    };

    double worst = 0.0;
    const int samples = 400;
    for (int i = 0; i <= samples; ++i) {
        double s = span * double(i) / samples;
        worst = std::max(worst, std::abs(at(a, ca, s) - at(b, cb, s)));
    }
    return worst;
}

}  // namespace shapedyn
