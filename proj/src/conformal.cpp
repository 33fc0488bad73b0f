#include "shapedyn/conformal.hpp"

#include <cmath>

namespace shapedyn {

namespace {

constexpr double kPairDistanceFloor = 1e-14;

double pair_sum(const MassedConfiguration& cfg, int power) {
    double s = 0.0;
    for (int a = 0; a < cfg.particle_count(); ++a) {
        for (int b = a + 1; b < cfg.particle_count(); ++b) {
            double r = (cfg.positions.col(a) - cfg.positions.col(b)).norm();
            if (r < kPairDistanceFloor)
                throw DegenerateConfiguration("conformal_factor: coincident pair");
            s += cfg.masses[a] * cfg.masses[b] / (power == 1 ? r : r * r);
        }
    }
    return s;
}

}  // namespace

ConformalModel ConformalModel::pair_sum_squared() {
    return ConformalModel(Kind::PairSumSquared, "pair-sum-squared");
}
ConformalModel ConformalModel::inverse_scale_moment() {
    return ConformalModel(Kind::InverseScaleMoment, "inverse-scale-moment");
}
ConformalModel ConformalModel::canonical() { return ConformalModel(Kind::Canonical, "canonical"); }
ConformalModel ConformalModel::inverse_pair_squares() {
    return ConformalModel(Kind::InversePairSquares, "inverse-pair-squares");
}
ConformalModel ConformalModel::gravity_like() {
    return ConformalModel(Kind::GravityLike, "gravity-like");
}

ConformalModel ConformalModel::user_supplied(
    std::function<double(const MassedConfiguration&)> fn,
    const std::vector<MassedConfiguration>& probes, std::string label) {
    if (probes.empty()) throw ConfigError("user conformal factor: probe configurations required");
    for (const auto& cfg : probes) {
        double f0 = fn(cfg);
        if (!(f0 > 0.0)) throw ConfigError("user conformal factor: not positive on probe");
        for (double s : {0.5, 2.0}) {
            SimilarityTransform t;
            t.scale = s;
            double fs = fn(apply_similarity(cfg, t));
            if (std::abs(fs - f0 / (s * s)) > 1e-8 * f0)
                throw ConfigError("user conformal factor: homogeneity f(sq) = s^-2 f(q) violated");
        }
    }
    ConformalModel m(Kind::UserSupplied, std::move(label));
    m.user_fn_ = std::move(fn);
    return m;
}

ConformalModel ConformalModel::flat_toy() {
    ConformalModel m(Kind::UserSupplied, "flat-toy");
    m.user_fn_ = [](const MassedConfiguration&) { return 1.0; };
    return m;
}

double ConformalModel::value(const MassedConfiguration& cfg) const {
    switch (kind_) {
        case Kind::PairSumSquared: {
            double s = pair_sum(cfg, 1);
            return s * s;
        }
        case Kind::InverseScaleMoment: {
            double l2 = scale_moment(cfg);
            if (l2 <= kEpsScale)
                throw DegenerateConfiguration("conformal_factor: vanishing scale moment");
            return 1.0 / l2;
        }
        case Kind::Canonical: {
            double l2 = scale_moment(cfg);
            if (l2 <= kEpsScale)
                throw DegenerateConfiguration("conformal_factor: vanishing scale moment");
            double det = inertia_tensor(cfg).determinant();
            if (det <= collinearity_threshold(l2))
                throw DegenerateConfiguration("conformal_factor: collinear configuration");
            return std::pow(l2, -4.0 / 7.0) * std::pow(det, -1.0 / 7.0);
        }
        case Kind::InversePairSquares:
            return pair_sum(cfg, 2);
        case Kind::GravityLike: {
            double l2 = scale_moment(cfg);
            if (l2 <= kEpsScale)
                throw DegenerateConfiguration("conformal_factor: vanishing scale moment");
            return pair_sum(cfg, 1) / std::sqrt(l2);
        }
        case Kind::UserSupplied:
            return user_fn_(cfg);
    }
    throw ConfigError("conformal_factor: unknown kind");
}

const std::vector<ConformalModel>& ConformalModel::builtin_models() {
    static const std::vector<ConformalModel> models = {
        pair_sum_squared(), inverse_scale_moment(), canonical(), inverse_pair_squares(),
        gravity_like()};
    return models;
}

ConformalModel ConformalModel::by_name(const std::string& name) {
    for (const auto& m : builtin_models())
        if (m.name() == name) return m;
    if (name == "flat-toy") return flat_toy();
    throw ConfigError("unknown conformal model: " + name);
}

double conformal_factor(const ConformalModel& model, const MassedConfiguration& cfg) {
    return model.value(cfg);
}

double invariant_metric_inner(const ConformalModel& model, const MassedConfiguration& cfg,
                              const TangentVector& u, const TangentVector& v) {
    return model.value(cfg) * mass_metric_inner(cfg, u, v);
}

}  // namespace shapedyn
