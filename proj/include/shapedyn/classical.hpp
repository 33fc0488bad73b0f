#pragma once

#include <optional>
#include <vector>

#include "shapedyn/bundle.hpp"
#include "shapedyn/conformal.hpp"

namespace shapedyn {

// One classical state: configuration plus velocity field.
struct ClassicalState {
    MassedConfiguration config;
    TangentVector velocity;
};

// Time-stamped trajectory. Conserved-quantity diagnostics are always computed
// from the stored states, never cached separately.
struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<ClassicalState> states;
    bool aborted = false;        // degenerate or nodal abort with partial record
    std::string abort_reason;

    std::size_t size() const { return times.size(); }

    double energy(const ConformalModel& model, std::size_t i) const;
    Vec3 momentum(std::size_t i) const;
    Vec3 angular_momentum(std::size_t i) const;
    double dilational(std::size_t i) const;
};

// Polyline in the Bookstein chart; parametrization-free semantics.
struct ShapePath {
    std::vector<std::complex<double>> points;
    std::vector<double> params;            // optional parameter values
    std::vector<std::size_t> flagged;      // indices near the collinear boundary

    std::size_t size() const { return points.size(); }
};

// Acceleration field of the potential V = -f: a = grad(f) / m componentwise,
// by central finite differences of f with scale-relative step.
TangentVector newton_force(const ConformalModel& model, const MassedConfiguration& cfg,
                           double step_rel = 1e-5, bool richardson = false);

// Random horizontal velocity with total momentum, angular momentum and
// dilational momentum zero, rescaled to total energy 1/2 |v|^2 - f = 0.
TangentVector sample_horizontal_initial(const ConformalModel& model,
                                        const MassedConfiguration& cfg0, std::uint64_t seed);

// Velocity-Verlet integration of m qdd = grad f. Constraints are measured,
// never re-imposed. Aborts with a partial record if the run degenerates.
TrajectoryRecord integrate_newton_gauge(const ConformalModel& model,
                                        const MassedConfiguration& cfg0, const TangentVector& v0,
                                        double dt, int steps, double force_step_rel = 1e-5);

// Reparametrize a Newton-gauge trajectory so the projected shape motion runs
// at constant speed v_shape with respect to g_B. Timestamps change; the
// geometric path does not.
TrajectoryRecord invariant_gauge_time(const ConformalModel& model, const TrajectoryRecord& traj,
                                      double v_shape);

// Shape-space speed of a state: sqrt(f) |v_perp|_{g_e}.
double state_shape_speed(const ConformalModel& model, const ClassicalState& s);

// Geodesic of the pulled-back shape metric in the Bookstein chart, integrated
// with RK4; Christoffel symbols from central differences of G(z).
ShapePath shape_geodesic(const ConformalModel& model, const ShapePoint& z0,
                         std::complex<double> dz0, int steps, double h,
                         const Eigen::VectorXd& masses);

struct JacobiOptions {
    int max_iterations = 2000;
    double gradient_tolerance = 1e-10;  // on the functional gradient norm
    double initial_step = 0.05;
};

struct JacobiResult {
    ShapePath path;
    double functional = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Fixed-knot minimization of sum sqrt(E - V) * |dq|_{g_B} by gradient descent
// with backtracking; knots are re-spaced to equal chord length each sweep.
// For V = 0 the stationary path is the g_B geodesic between the endpoints.
JacobiResult jacobi_path_minimize(const ConformalModel& model, const ShapePoint& z0,
                                  const ShapePoint& z1, int n_knots,
                                  const std::function<double(const ShapePoint&)>& potential,
                                  double energy_const, const Eigen::VectorXd& masses,
                                  const JacobiOptions& opts = {});

// Pointwise Bookstein projection of a three-particle trajectory.
ShapePath project_to_shape(const TrajectoryRecord& traj);

// Discrete g_B arclength of a chart polyline.
double shape_path_length(const ConformalModel& model, const ShapePath& path,
                         const Eigen::VectorXd& masses);

// Maximum chart distance between two polylines compared at equal g_B
// arclength, over [0, span].
double chart_path_distance(const ConformalModel& model, const ShapePath& a, const ShapePath& b,
                           double span, const Eigen::VectorXd& masses);

}  // namespace shapedyn
