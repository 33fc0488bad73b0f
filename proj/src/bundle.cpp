#include "shapedyn/bundle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace shapedyn {

ShapePoint::ShapePoint(std::complex<double> value) : z(value) {
    if (!(z.imag() > 0.0))
        throw DegenerateConfiguration("shape point: Im z must be positive (collinear boundary)");
}

VerticalFrame vertical_generators(const MassedConfiguration& cfg) {
    const int n = cfg.particle_count();
    VerticalFrame frame;
    frame.base = cfg;
    for (int i = 0; i < 3; ++i) {
        Eigen::Matrix3Xd c = Eigen::Matrix3Xd::Zero(3, n);
        c.row(i).setOnes();
        frame.generators[i] = TangentVector(cfg, std::move(c));
    }
    for (int i = 0; i < 3; ++i) {
        Vec3 omega = Vec3::Unit(i);
        Eigen::Matrix3Xd c(3, n);
        for (int a = 0; a < n; ++a) c.col(a) = omega.cross(Vec3(cfg.positions.col(a)));
        frame.generators[3 + i] = TangentVector(cfg, std::move(c));
    }
    frame.generators[6] = TangentVector(cfg, cfg.positions);
    return frame;
}

Eigen::Matrix<double, 7, 7> vertical_gram(const MassedConfiguration& cfg) {
    VerticalFrame frame = vertical_generators(cfg);
    Eigen::Matrix<double, 7, 7> gram;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            gram(i, j) = mass_metric_inner(cfg, frame.generators[i], frame.generators[j]);
            gram(j, i) = gram(i, j);
        }
    return gram;
}

TangentVector horizontal_project(const ConformalModel& model, const MassedConfiguration& cfg,
                                 const TangentVector& u) {
    require_regular(cfg, "horizontal_project");
    conformal_factor(model, cfg);  // model-specific regularity
    VerticalFrame frame = vertical_generators(cfg);
    Eigen::Matrix<double, 7, 7> gram = vertical_gram(cfg);

    // Conditioning guard: collinear shapes make the rotation block singular.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 7, 7>> es(gram);
    double lmin = es.eigenvalues().minCoeff();
    double lmax = es.eigenvalues().maxCoeff();
    if (!(lmin > 0.0) || lmax / lmin > 1e12)
        throw DegenerateConfiguration("horizontal_project: vertical Gram matrix is singular");

    Eigen::Matrix<double, 7, 1> rhs;
    for (int i = 0; i < 7; ++i) rhs[i] = mass_metric_inner(cfg, u, frame.generators[i]);
    Eigen::Matrix<double, 7, 1> coeff = es.eigenvectors() *
                                        (es.eigenvectors().transpose() * rhs).cwiseQuotient(
                                            es.eigenvalues());
    Eigen::Matrix3Xd c = u.components;
    for (int i = 0; i < 7; ++i) c -= coeff[i] * frame.generators[i].components;
    return TangentVector(cfg, std::move(c));
}

double shape_metric_norm(const ConformalModel& model, const MassedConfiguration& cfg,
                         const TangentVector& u) {
    TangentVector perp = horizontal_project(model, cfg, u);
    return std::sqrt(conformal_factor(model, cfg)) * mass_metric_norm(cfg, perp);
}

double shape_jacobian(const ConformalModel& model, const MassedConfiguration& cfg) {
    double l2 = scale_moment(cfg);
    if (l2 <= kEpsScale) throw DegenerateConfiguration("shape_jacobian: vanishing scale moment");
    double det = inertia_tensor(cfg).determinant();
    if (det <= collinearity_threshold(l2))
        throw DegenerateConfiguration("shape_jacobian: collinear configuration");
    double f = conformal_factor(model, cfg);
    return std::sqrt(l2) * std::pow(f, 3.5) * std::sqrt(det);
}

double shape_jacobian_invariant(const ConformalModel& model, const MassedConfiguration& cfg) {
    double l2 = scale_moment(cfg);
    return l2 * std::sqrt(l2) * shape_jacobian(model, cfg);
}

double vertical_volume(const ConformalModel& model, const MassedConfiguration& cfg) {
    require_regular(cfg, "vertical_volume");
    double f = conformal_factor(model, cfg);
    double det = vertical_gram(cfg).determinant();
    if (!(det > 0.0)) throw DegenerateConfiguration("vertical_volume: degenerate vertical frame");
    // Restriction of g = f g_e to the 7 generators scales the Gram determinant
    // by f^7.
    return std::pow(f, 3.5) * std::sqrt(det);
}

ShapePoint bookstein_shape(const MassedConfiguration& cfg) {
    if (cfg.particle_count() != 3)
        throw ConfigError("bookstein_shape: chart is defined for 3 particles");
    Vec3 p1 = cfg.positions.col(0);
    Vec3 p2 = cfg.positions.col(1);
    Vec3 p3 = cfg.positions.col(2);
    Vec3 base = p2 - p1;
    double blen = base.norm();
    if (blen < 1e-14) throw DegenerateConfiguration("bookstein_shape: coincident base vertices");
    Vec3 e1 = base / blen;
    Vec3 normal = base.cross(p3 - p1);
    double nlen = normal.norm();
    if (nlen < 1e-12 * blen * blen)
        throw DegenerateConfiguration("bookstein_shape: collinear configuration");
    Vec3 e2 = (normal / nlen).cross(e1);
    Vec3 mid = 0.5 * (p1 + p2);
    Vec3 rel = p3 - mid;
    // Similarity mapping p1, p2 to -1, +1 sends p3 to 2 rel / |p2 - p1| in the
    // (e1, e2) frame of the triangle's plane.
    std::complex<double> z(2.0 * rel.dot(e1) / blen, 2.0 * rel.dot(e2) / blen);
    if (z.imag() < 0.0) z = std::conj(z);  // reflection fold
    return ShapePoint(z);
}

MassedConfiguration bookstein_representative(const ShapePoint& z, const Eigen::VectorXd& masses) {
    if (masses.size() != 3)
        throw ConfigError("bookstein_representative: chart is defined for 3 particles");
    Eigen::Matrix3Xd pos(3, 3);
    pos.col(0) = Vec3(-1.0, 0.0, 0.0);
    pos.col(1) = Vec3(1.0, 0.0, 0.0);
    pos.col(2) = Vec3(z.re(), z.im(), 0.0);
    return MassedConfiguration(std::move(pos), masses);
}

namespace {

Eigen::Matrix2d pullback_metric_impl(const ConformalModel& model, const ShapePoint& z,
                                     const Eigen::VectorXd& masses,
                                     const SimilarityTransform* fiber, double h) {
    // Chart differential by central differences of the canonical section,
    // pushed to the requested fiber point, then projected horizontal.
    MassedConfiguration rep = bookstein_representative(z, masses);
    if (fiber) rep = apply_similarity(rep, *fiber);
    TangentVector lifts[2];
    for (int i = 0; i < 2; ++i) {
        std::complex<double> dz = (i == 0) ? std::complex<double>(h, 0.0)
                                           : std::complex<double>(0.0, h);
        MassedConfiguration plus = bookstein_representative(ShapePoint(z.z + dz), masses);
        MassedConfiguration minus = bookstein_representative(ShapePoint(z.z - dz), masses);
        Eigen::Matrix3Xd diff = (plus.positions - minus.positions) / (2.0 * h);
        TangentVector u(bookstein_representative(z, masses), std::move(diff));
        if (fiber) u = pushforward(*fiber, u);
        lifts[i] = horizontal_project(model, rep, u);
    }
    double f = conformal_factor(model, rep);
    Eigen::Matrix2d g;
    g(0, 0) = f * mass_metric_inner(rep, lifts[0], lifts[0]);
    g(1, 1) = f * mass_metric_inner(rep, lifts[1], lifts[1]);
    g(0, 1) = f * mass_metric_inner(rep, lifts[0], lifts[1]);
    g(1, 0) = g(0, 1);
    return g;
}

}  // namespace

Eigen::Matrix2d pullback_shape_metric(const ConformalModel& model, const ShapePoint& z,
                                      const Eigen::VectorXd& masses, double chart_step) {
    return pullback_metric_impl(model, z, masses, nullptr, chart_step);
}

Eigen::Matrix2d pullback_shape_metric_at(const ConformalModel& model, const ShapePoint& z,
                                         const Eigen::VectorXd& masses,
                                         const SimilarityTransform& fiber_position,
                                         double chart_step) {
    return pullback_metric_impl(model, z, masses, &fiber_position, chart_step);
}

ProcrustesResult procrustes_align(const MassedConfiguration& cfgA,
                                  const MassedConfiguration& cfgB) {
    if (!cfgA.same_masses(cfgB))
        throw ConfigError("procrustes_align: configurations must share masses");
    require_regular(cfgA, "procrustes_align");
    require_regular(cfgB, "procrustes_align");

    Vec3 cmA = center_of_mass(cfgA);
    Vec3 cmB = center_of_mass(cfgB);
    const int n = cfgA.particle_count();

    Mat3 cross = Mat3::Zero();
    double normB2 = 0.0, normA2 = 0.0;
    for (int a = 0; a < n; ++a) {
        Vec3 pa = cfgA.positions.col(a) - cmA;
        Vec3 pb = cfgB.positions.col(a) - cmB;
        cross += cfgA.masses[a] * pa * pb.transpose();
        normB2 += cfgA.masses[a] * pb.squaredNorm();
        normA2 += cfgA.masses[a] * pa.squaredNorm();
    }

    Eigen::JacobiSVD<Mat3> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 u = svd.matrixU();
    Mat3 v = svd.matrixV();
    Vec3 s = svd.singularValues();
    double flip = (u * v.transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    Mat3 rot = u * Vec3(1.0, 1.0, flip).asDiagonal() * v.transpose();
    double trace = s[0] + s[1] + flip * s[2];
    if (!(trace > 0.0)) throw DegenerateConfiguration("procrustes_align: degenerate alignment");

    ProcrustesResult out;
    out.transform.rotation = rot;
    out.transform.scale = trace / normB2;
    out.transform.translation = cmA - out.transform.scale * (rot * cmB);
    double resid2 = normA2 - trace * trace / normB2;
    out.residual = std::sqrt(std::max(0.0, resid2));
    return out;
}

}  // namespace shapedyn
