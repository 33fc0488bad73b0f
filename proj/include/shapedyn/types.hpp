#pragma once

#include <Eigen/Dense>

#include "shapedyn/errors.hpp"
#include "shapedyn/rng.hpp"

namespace shapedyn {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Absolute configuration of N labelled particles with strictly positive masses.
// Positions are stored one column per particle.
struct MassedConfiguration {
    Eigen::Matrix3Xd positions;  // 3 x N
    Eigen::VectorXd masses;      // N

    MassedConfiguration() = default;
    MassedConfiguration(Eigen::Matrix3Xd pos, Eigen::VectorXd m);

    int particle_count() const { return static_cast<int>(positions.cols()); }
    int dof() const { return 3 * particle_count(); }

    Eigen::VectorXd flat() const;
    static MassedConfiguration from_flat(const Eigen::VectorXd& x, const Eigen::VectorXd& masses);

    // Mass of the particle owning flat coordinate k.
    double coord_mass(int k) const { return masses[k / 3]; }

    MassedConfiguration with_positions(const Eigen::Matrix3Xd& pos) const {
        return MassedConfiguration(pos, masses);
    }
    MassedConfiguration shifted_flat(const Eigen::VectorXd& dx) const;

    bool same_masses(const MassedConfiguration& other, double tol = 0.0) const;
};

// Element of the similarity group: q -> scale * rotation * q + translation.
struct SimilarityTransform {
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();
    double scale = 1.0;

    SimilarityTransform() = default;
    SimilarityTransform(const Mat3& r, const Vec3& t, double s);

    Vec3 apply(const Vec3& p) const { return scale * (rotation * p) + translation; }
    SimilarityTransform inverse() const;
    // Composition: (a.compose(b))(q) = a(b(q)).
    SimilarityTransform compose(const SimilarityTransform& other) const;

    static SimilarityTransform identity() { return {}; }
    // Deterministic random element; scale log-uniform in [1/scale_span, scale_span].
    static SimilarityTransform random(CounterRng& rng, double translation_span = 2.0,
                                      double scale_span = 3.0);
};

// Tangent vector at a configuration; one 3-vector per particle.
struct TangentVector {
    MassedConfiguration base;
    Eigen::Matrix3Xd components;  // 3 x N

    TangentVector() = default;
    TangentVector(MassedConfiguration b, Eigen::Matrix3Xd c);

    Eigen::VectorXd flat() const;
    static TangentVector from_flat(const MassedConfiguration& base, const Eigen::VectorXd& v);
};

MassedConfiguration apply_similarity(const MassedConfiguration& cfg, const SimilarityTransform& t);
// Differential of a similarity acting on tangent vectors: u -> scale * R * u.
TangentVector pushforward(const SimilarityTransform& t, const TangentVector& u);

// Deterministic random test configuration with positions ~ N(0, span^2),
// resampled until comfortably non-collinear.
MassedConfiguration random_regular_configuration(CounterRng& rng, int n_particles,
                                                 double span = 1.0, bool unit_masses = true);

}  // namespace shapedyn
