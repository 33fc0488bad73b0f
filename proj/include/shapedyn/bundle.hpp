#pragma once

#include <array>
#include <complex>

#include "shapedyn/conformal.hpp"
#include "shapedyn/types.hpp"

namespace shapedyn {

// The seven infinitesimal generators of the similarity group at a
// configuration, ordered as 3 translations, 3 rotations about the coordinate
// axes through the origin, 1 dilation. Their span is the vertical subspace.
struct VerticalFrame {
    MassedConfiguration base;
    std::array<TangentVector, 7> generators;
};

// Bookstein coordinate of a three-particle shape: a point of the open upper
// half plane. Collinear shapes (the boundary) are rejected.
struct ShapePoint {
    std::complex<double> z;

    ShapePoint() : z(0.0, 1.0) {}
    explicit ShapePoint(std::complex<double> value);
    double re() const { return z.real(); }
    double im() const { return z.imag(); }
};

VerticalFrame vertical_generators(const MassedConfiguration& cfg);

// Gram matrix of the seven generators in the mass metric g_e.
Eigen::Matrix<double, 7, 7> vertical_gram(const MassedConfiguration& cfg);

// g-orthogonal projection onto the horizontal subspace. Conformal rescaling
// leaves orthogonality to the fiber unchanged, so the projection is the same
// for every model; the model argument participates only in regularity checks.
TangentVector horizontal_project(const ConformalModel& model, const MassedConfiguration& cfg,
                                 const TangentVector& u);

// Norm of the shape-space displacement under g_B: sqrt(f) * |u_perp|_{g_e}.
double shape_metric_norm(const ConformalModel& model, const MassedConfiguration& cfg,
                         const TangentVector& u);

// Closed-form shape Jacobian J = L f^{7/2} sqrt(det M).
double shape_jacobian(const ConformalModel& model, const MassedConfiguration& cfg);
// Invariant variant J_B = L^3 J = L^4 f^{7/2} sqrt(det M); constant on fibers.
double shape_jacobian_invariant(const ConformalModel& model, const MassedConfiguration& cfg);
// Independent route: volume of the vertical parallelepiped under g, computed
// as sqrt(det) of the generator Gram matrix. Agrees with shape_jacobian up to
// one configuration-independent constant.
double vertical_volume(const ConformalModel& model, const MassedConfiguration& cfg);

// Bookstein chart for N = 3: vertices 1, 2 go to -1, +1 by a similarity and
// vertex 3 lands at z; the lower half plane is folded up by conjugation.
ShapePoint bookstein_shape(const MassedConfiguration& cfg);

// Canonical representative of a shape point: particles at (-1,0,0), (1,0,0),
// (Re z, Im z, 0) with the given masses.
MassedConfiguration bookstein_representative(const ShapePoint& z, const Eigen::VectorXd& masses);

// Pullback of g_B to the Bookstein chart: G_ij(z) = g(h_i, h_j) with h_i the
// horizontal lift of the i-th coordinate direction at a fiber representative.
Eigen::Matrix2d pullback_shape_metric(const ConformalModel& model, const ShapePoint& z,
                                      const Eigen::VectorXd& masses, double chart_step = 1e-6);
// Same, evaluated at an arbitrary representative produced by a similarity
// transform of the canonical one (for fiber-independence checks).
Eigen::Matrix2d pullback_shape_metric_at(const ConformalModel& model, const ShapePoint& z,
                                         const Eigen::VectorXd& masses,
                                         const SimilarityTransform& fiber_position,
                                         double chart_step = 1e-6);

struct ProcrustesResult {
    SimilarityTransform transform;  // minimizer t of |A - t(B)|_{g_e}
    double residual;                // mass-metric distance at the optimum
};

// Best match of configuration B onto configuration A over the similarity
// group, minimizing the mass-weighted Euclidean distance |A - t(B)|.
ProcrustesResult procrustes_align(const MassedConfiguration& cfgA, const MassedConfiguration& cfgB);

}  // namespace shapedyn
