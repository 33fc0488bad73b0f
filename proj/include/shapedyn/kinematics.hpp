#pragma once

#include "shapedyn/types.hpp"

namespace shapedyn {

// Mass-weighted centroid (sum m_a q_a) / (sum m_a).
Vec3 center_of_mass(const MassedConfiguration& cfg);

// Scale moment L^2 = sum_a m_a |q_a - q_cm|^2, the moment of inertia about the
// center of mass.
double scale_moment(const MassedConfiguration& cfg);
// Equivalent pair form (sum m)^-1 sum_{a<b} m_a m_b |q_a - q_b|^2.
double scale_moment_pair_form(const MassedConfiguration& cfg);
// sqrt(L^2); the configuration's length scale.
double config_scale(const MassedConfiguration& cfg);

// Inertia tensor about the center of mass, M_ij = sum m (rho^2 d_ij - rho_i rho_j).
Mat3 inertia_tensor(const MassedConfiguration& cfg);

// Degeneracy thresholds (scale-relative for det M).
inline constexpr double kEpsScale = 1e-12;
inline double collinearity_threshold(double scale_moment_value) {
    return 1e-10 * scale_moment_value * scale_moment_value * scale_moment_value;  // 1e-10 * L^6
}
bool is_regular(const MassedConfiguration& cfg);
void require_regular(const MassedConfiguration& cfg, const char* where);

// Mass-weighted Euclidean inner product g_e(u, v) = sum m_a u_a . v_a.
double mass_metric_inner(const MassedConfiguration& cfg, const TangentVector& u,
                         const TangentVector& v);
double mass_metric_norm(const MassedConfiguration& cfg, const TangentVector& u);

// Conserved-quantity functionals of a state (cfg, velocity).
Vec3 total_momentum(const MassedConfiguration& cfg, const TangentVector& v);
Vec3 total_angular_momentum(const MassedConfiguration& cfg, const TangentVector& v);
double dilational_momentum(const MassedConfiguration& cfg, const TangentVector& v);

}  // namespace shapedyn
