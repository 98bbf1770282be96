#include "pants/geom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pants/geom/double_points.hpp"
#include "pants/geom/numderiv.hpp"
#include "pants/geom/skeleton.hpp"
#include "pants/geom/toy.hpp"

namespace pants::geom {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

AngleTriple sample_disk(std::mt19937_64& rng) {
    for (;;) {
        AngleTriple t{uniform(rng, -1, 1), uniform(rng, -1, 1)};
        if (in_disk(t)) return t;
    }
}

AngleTriple sample_torus(std::mt19937_64& rng) {
    return {uniform(rng, 0, 2 * M_PI), uniform(rng, 0, 2 * M_PI)};
}

GeomCheck below(std::string name, double value, double threshold, long samples) {
    return {std::move(name), value, threshold, false, value < threshold, samples};
}

GeomCheck above(std::string name, double value, double threshold, long samples) {
    return {std::move(name), value, threshold, true, value > threshold, samples};
}

}  // namespace

std::vector<GeomCheck> identity_checks(const GeomConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    const long n = cfg.samples;
    std::vector<GeomCheck> checks;

    double quotient = 0, odd = 0;
    for (long i = 0; i < n; ++i) {
        auto d = toy_property_defects(sample_disk(rng));
        quotient = std::max(quotient, d.quotient);
        odd = std::max(odd, d.odd);
    }
    checks.push_back(below("toy_quotient_defect", quotient, cfg.tol, n));
    checks.push_back(below("toy_odd_defect", odd, cfg.tol, n));

    double wall = 0;
    for (long i = 0; i < n; ++i) {
        double s = uniform(rng, -0.7, 0.7);
        AngleTriple t = i % 3 == 0 ? AngleTriple{s, -s}
                      : i % 3 == 1 ? AngleTriple{0.0, s}
                                   : AngleTriple{s, 0.0};
        auto d = toy_property_defects(t);
        if (d.wall_zero) wall = std::max(wall, *d.wall_zero);
    }
    checks.push_back(below("toy_wall_zero_defect", wall, cfg.tol, n));

    double lagr = 0;
    for (long i = 0; i < n / 4 + 1; ++i) {
        AngleTriple t = sample_torus(rng);
        double r = uniform(rng, 0.1, 2.0);
        for (double s : {1.0, 0.5, 2.0, 10.0})
            lagr = std::max(lagr, lagrangian_defect(SkeletonPoint::at(s * r, t)));
    }
    checks.push_back(below("lagrangian_defect", lagr, cfg.tol, n));

    double fiber = 0;
    for (long i = 0; i < n; ++i) {
        Vec6 z, v{};
        for (auto& x : z) x = uniform(rng, -1, 1);
        for (int a = 0; a < 3; ++a) v[2 * a + 1] = uniform(rng, -1, 1);
        fiber = std::max(fiber, fiber_primitive_defect(z, v));
    }
    checks.push_back(below("fiber_primitive_defect", fiber, cfg.tol, n));

    return checks;
}

std::vector<GeomCheck> rank_checks(const GeomConfig& cfg) {
    std::mt19937_64 rng(cfg.seed + 1);
    std::vector<GeomCheck> checks;

    double sigma2_at_r = 0;
    for (const auto& r : ramification_points()) {
        sigma2_at_r = std::max(sigma2_at_r,
                               jacobian_rank_profile(ChartMap::BaseOnTorus, r, cfg).sv[1]);
        sigma2_at_r = std::max(sigma2_at_r,
                               jacobian_rank_profile(ChartMap::FrontOnTorus, r, cfg).sv[1]);
    }
    checks.push_back(below("ramification_sigma2", sigma2_at_r, cfg.jacobian_tol, 4));

    const long n = 1000;
    double min_sigma2 = 1e300;
    long checked = 0;
    while (checked < n) {
        AngleTriple t = sample_torus(rng);
        if (distance_to_ramification(t) <= 0.1) continue;
        ++checked;
        min_sigma2 = std::min(min_sigma2,
                              jacobian_rank_profile(ChartMap::FrontOnTorus, t, cfg).sv[1]);
        min_sigma2 = std::min(min_sigma2,
                              jacobian_rank_profile(ChartMap::BaseOnTorus, t, cfg).sv[1]);
    }
    checks.push_back(above("immersion_min_sigma2", min_sigma2, cfg.jacobian_tol, n));

    checks.push_back(below("toy_origin_sigma2",
                           jacobian_rank_profile(ChartMap::ToyF, {0, 0}, cfg).sv[1],
                           cfg.jacobian_tol, 1));

    double submersion = 1e300;
    for (long i = 0; i < n; ++i) {
        double s = uniform(rng, 0.05, 0.7) * (i % 2 ? 1 : -1);
        AngleTriple t = i % 3 == 0 ? AngleTriple{s, -s}
                      : i % 3 == 1 ? AngleTriple{0.0, s}
                                   : AngleTriple{s, 0.0};
        submersion = std::min(submersion, norm(toy_g_gradient(t)));
    }
    checks.push_back(above("wall_submersion_margin", submersion, cfg.jacobian_tol, n));

    return checks;
}

std::vector<GeomCheck> double_point_checks(const GeomConfig& cfg) {
    std::vector<GeomCheck> checks;

    for (ChartMap map : {ChartMap::FrontOnTorus, ChartMap::ToyF}) {
        const char* tag = map == ChartMap::FrontOnTorus ? "front" : "toy";
        auto report = double_point_report(map, cfg.samples, cfg);
        double max_wall = 0;
        long nontransverse = 0;
        for (const auto& dp : report.points) {
            max_wall = std::max(max_wall, dp.wall_distance);
            if (!dp.transverse) ++nontransverse;
        }
        checks.push_back(above(std::string("double_points_") + tag + "_found",
                               static_cast<double>(report.points.size()), 10, cfg.samples));
        checks.push_back(below(std::string("double_points_") + tag + "_max_wall_distance",
                               max_wall, 1e-6, static_cast<long>(report.points.size())));
        checks.push_back(below(std::string("double_points_") + tag + "_nontransverse",
                               static_cast<double>(nontransverse), 0.5,
                               static_cast<long>(report.points.size())));
    }

    auto patch = [](const AngleTriple& t) {
        return t.theta1 > 0.1 && t.theta2 > 0.1 && wrap_angle(t.theta3()) < -0.2;
    };
    auto control = double_point_report(ChartMap::BaseOnTorus, cfg.samples, cfg, patch);
    checks.push_back(below("patch_double_points", static_cast<double>(control.points.size()),
                           0.5, cfg.samples));

    return checks;
}

std::vector<GeomCheck> run_geometry_suite(const GeomConfig& cfg) {
    std::vector<GeomCheck> all = identity_checks(cfg);
    for (auto& c : rank_checks(cfg)) all.push_back(std::move(c));
    for (auto& c : double_point_checks(cfg)) all.push_back(std::move(c));
    return all;
}

}  // namespace pants::geom
