#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shapedyn/kinematics.hpp"
#include "shapedyn/types.hpp"

namespace shapedyn {

// Choice of conformal factor f defining the invariant metric g = f * g_e.
// Every built-in factor is invariant under rotations and translations and
// homogeneous of degree -2, so g is invariant under the full similarity group.
// Dimensional prefactors are fixed to 1; results are reported in these units.
class ConformalModel {
public:
    enum class Kind {
        PairSumSquared,     // (sum_{a<b} m_a m_b / r_ab)^2
        InverseScaleMoment, // 1 / L^2
        Canonical,          // L^{-8/7} (det M)^{-1/7}
        InversePairSquares, // sum_{a<b} m_a m_b / r_ab^2
        GravityLike,        // L^{-1} sum_{a<b} m_a m_b / r_ab
        UserSupplied,
    };

    static ConformalModel pair_sum_squared();
    static ConformalModel inverse_scale_moment();
    static ConformalModel canonical();
    static ConformalModel inverse_pair_squares();
    static ConformalModel gravity_like();
    // User factor; must pass a numerical homogeneity self-test f(s q) = s^-2 f(q)
    // on the probe configurations (relative tolerance 1e-8). Fails fast otherwise.
    static ConformalModel user_supplied(std::function<double(const MassedConfiguration&)> fn,
                                        const std::vector<MassedConfiguration>& probes,
                                        std::string label = "user");
    // f == 1: the flat-space test fixture. Not homogeneous; bypasses the
    // self-test deliberately and is only meaningful for flat-geometry checks.
    static ConformalModel flat_toy();

    double value(const MassedConfiguration& cfg) const;
    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    static const std::vector<ConformalModel>& builtin_models();
    static ConformalModel by_name(const std::string& name);

private:
    ConformalModel(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}
    Kind kind_;
    std::string name_;
    std::function<double(const MassedConfiguration&)> user_fn_;
};

// f(cfg) for the selected model. Throws DegenerateConfiguration when a
// required denominator vanishes (coincident pair, collinear for Canonical).
double conformal_factor(const ConformalModel& model, const MassedConfiguration& cfg);

// Invariant metric g(u, v) = f(cfg) * g_e(u, v).
double invariant_metric_inner(const ConformalModel& model, const MassedConfiguration& cfg,
                              const TangentVector& u, const TangentVector& v);

}  // namespace shapedyn
