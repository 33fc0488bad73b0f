#include "shapedyn/kinematics.hpp"

#include <cmath>

namespace shapedyn {

Vec3 center_of_mass(const MassedConfiguration& cfg) {
    return (cfg.positions * cfg.masses) / cfg.masses.sum();
}

double scale_moment(const MassedConfiguration& cfg) {
    Vec3 cm = center_of_mass(cfg);
    double l2 = 0.0;
    for (int a = 0; a < cfg.particle_count(); ++a)
        l2 += cfg.masses[a] * (cfg.positions.col(a) - cm).squaredNorm();
    return l2;
}

double scale_moment_pair_form(const MassedConfiguration& cfg) {
    double sum = 0.0;
    for (int a = 0; a < cfg.particle_count(); ++a)
        for (int b = a + 1; b < cfg.particle_count(); ++b)
            sum += cfg.masses[a] * cfg.masses[b] *
                   (cfg.positions.col(a) - cfg.positions.col(b)).squaredNorm();
    return sum / cfg.masses.sum();
}

double config_scale(const MassedConfiguration& cfg) { return std::sqrt(scale_moment(cfg)); }

Mat3 inertia_tensor(const MassedConfiguration& cfg) {
    Vec3 cm = center_of_mass(cfg);
    Mat3 m = Mat3::Zero();
    for (int a = 0; a < cfg.particle_count(); ++a) {
        Vec3 rho = cfg.positions.col(a) - cm;
        m += cfg.masses[a] * (rho.squaredNorm() * Mat3::Identity() - rho * rho.transpose());
    }
    return m;
}

bool is_regular(const MassedConfiguration& cfg) {
    double l2 = scale_moment(cfg);
    if (l2 <= kEpsScale) return false;
    return inertia_tensor(cfg).determinant() > collinearity_threshold(l2);
}

void require_regular(const MassedConfiguration& cfg, const char* where) {
    if (!is_regular(cfg))
        throw DegenerateConfiguration(std::string(where) +
                                      ": configuration is collinear or coincident");
}

double mass_metric_inner(const MassedConfiguration& cfg, const TangentVector& u,
                         const TangentVector& v) {
    if (!u.base.same_masses(cfg) || !v.base.same_masses(cfg))
        throw BaseMismatch("mass_metric_inner: tangent vectors not based at this configuration");
    double s = 0.0;
    for (int a = 0; a < cfg.particle_count(); ++a)
        s += cfg.masses[a] * u.components.col(a).dot(v.components.col(a));
    return s;
}

double mass_metric_norm(const MassedConfiguration& cfg, const TangentVector& u) {
    return std::sqrt(mass_metric_inner(cfg, u, u));
}

Vec3 total_momentum(const MassedConfiguration& cfg, const TangentVector& v) {
    return v.components * cfg.masses;
}

Vec3 total_angular_momentum(const MassedConfiguration& cfg, const TangentVector& v) {
    Vec3 j = Vec3::Zero();
    for (int a = 0; a < cfg.particle_count(); ++a)
        j += cfg.masses[a] * cfg.positions.col(a).cross(v.components.col(a));
    return j;
}

double dilational_momentum(const MassedConfiguration& cfg, const TangentVector& v) {
    double d = 0.0;
    for (int a = 0; a < cfg.particle_count(); ++a)
        d += cfg.masses[a] * cfg.positions.col(a).dot(v.components.col(a));
    return d;
}

}  // namespace shapedyn
