#include "shapedyn/types.hpp"

#include <cmath>

#include "shapedyn/kinematics.hpp"

namespace shapedyn {

MassedConfiguration::MassedConfiguration(Eigen::Matrix3Xd pos, Eigen::VectorXd m)
    : positions(std::move(pos)), masses(std::move(m)) {
    if (positions.cols() != masses.size())
        throw ConfigError("configuration: positions/masses size mismatch");
    if (positions.cols() < 3) throw ConfigError("configuration: at least 3 particles required");
    if ((masses.array() <= 0.0).any()) throw ConfigError("configuration: masses must be positive");
}

Eigen::VectorXd MassedConfiguration::flat() const {
    return Eigen::Map<const Eigen::VectorXd>(positions.data(), positions.size());
}

MassedConfiguration MassedConfiguration::from_flat(const Eigen::VectorXd& x,
                                                   const Eigen::VectorXd& masses) {
    Eigen::Matrix3Xd pos = Eigen::Map<const Eigen::Matrix3Xd>(x.data(), 3, x.size() / 3);
    return MassedConfiguration(std::move(pos), masses);
}

MassedConfiguration MassedConfiguration::shifted_flat(const Eigen::VectorXd& dx) const {
    Eigen::Matrix3Xd pos = positions;
    Eigen::Map<Eigen::VectorXd>(pos.data(), pos.size()) += dx;
    return MassedConfiguration(std::move(pos), masses);
}

bool MassedConfiguration::same_masses(const MassedConfiguration& other, double tol) const {
    if (masses.size() != other.masses.size()) return false;
    return ((masses - other.masses).array().abs() <= tol).all();
}

SimilarityTransform::SimilarityTransform(const Mat3& r, const Vec3& t, double s)
    : rotation(r), translation(t), scale(s) {
    if (!(s > 0.0)) throw ConfigError("similarity: scale must be positive");
    if ((r.transpose() * r - Mat3::Identity()).norm() > 1e-12 || r.determinant() < 0.0)
        throw ConfigError("similarity: rotation must be special orthogonal");
}

SimilarityTransform SimilarityTransform::inverse() const {
    SimilarityTransform inv;
    inv.rotation = rotation.transpose();
    inv.scale = 1.0 / scale;
    inv.translation = -(inv.scale) * (inv.rotation * translation);
    return inv;
}

SimilarityTransform SimilarityTransform::compose(const SimilarityTransform& other) const {
    SimilarityTransform out;
    out.rotation = rotation * other.rotation;
    out.scale = scale * other.scale;
    out.translation = scale * (rotation * other.translation) + translation;
    return out;
}

SimilarityTransform SimilarityTransform::random(CounterRng& rng, double translation_span,
                                                double scale_span) {
    // Uniform rotation from a normalized quaternion.
    double q0 = rng.normal(), q1 = rng.normal(), q2 = rng.normal(), q3 = rng.normal();
    Eigen::Quaterniond quat(q0, q1, q2, q3);
    quat.normalize();
    SimilarityTransform t;
    t.rotation = quat.toRotationMatrix();
    for (int i = 0; i < 3; ++i) t.translation[i] = rng.uniform(-translation_span, translation_span);
    t.scale = std::exp(rng.uniform(-std::log(scale_span), std::log(scale_span)));
    return t;
}

TangentVector::TangentVector(MassedConfiguration b, Eigen::Matrix3Xd c)
    : base(std::move(b)), components(std::move(c)) {
    if (components.cols() != base.positions.cols())
        throw ConfigError("tangent vector: dimension does not match base configuration");
}

Eigen::VectorXd TangentVector::flat() const {
    return Eigen::Map<const Eigen::VectorXd>(components.data(), components.size());
}

TangentVector TangentVector::from_flat(const MassedConfiguration& base, const Eigen::VectorXd& v) {
    Eigen::Matrix3Xd c = Eigen::Map<const Eigen::Matrix3Xd>(v.data(), 3, v.size() / 3);
    return TangentVector(base, std::move(c));
}

MassedConfiguration apply_similarity(const MassedConfiguration& cfg, const SimilarityTransform& t) {
    Eigen::Matrix3Xd pos = t.scale * (t.rotation * cfg.positions);
    pos.colwise() += t.translation;
    return MassedConfiguration(std::move(pos), cfg.masses);
}

TangentVector pushforward(const SimilarityTransform& t, const TangentVector& u) {
    return TangentVector(apply_similarity(u.base, t), t.scale * (t.rotation * u.components));
}

MassedConfiguration random_regular_configuration(CounterRng& rng, int n_particles, double span,
                                                 bool unit_masses) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Eigen::Matrix3Xd pos(3, n_particles);
        for (int a = 0; a < n_particles; ++a)
            for (int i = 0; i < 3; ++i) pos(i, a) = span * rng.normal();
        Eigen::VectorXd m(n_particles);
        for (int a = 0; a < n_particles; ++a) m[a] = unit_masses ? 1.0 : rng.uniform(0.5, 2.0);
        MassedConfiguration cfg(std::move(pos), std::move(m));
        double l2 = scale_moment(cfg);
        double det = inertia_tensor(cfg).determinant();
        // Ask for a healthy margin above the degeneracy thresholds.
        if (l2 > 1e-6 && det > 1e-4 * l2 * l2 * l2) return cfg;
    }
    throw ConfigError("random_regular_configuration: could not draw a regular configuration");
}

}  // namespace shapedyn
