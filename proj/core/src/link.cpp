#include "pants/geom/link.hpp"

#include <algorithm>
#include <cmath>

#include "pants/errors.hpp"
#include "pants/geom/regions.hpp"
#include "pants/geom/toy.hpp"

namespace pants::geom {

namespace {

// |link image at radius r|^2 = r^2 S + r^4 g^2.
double link_radius_sq(double r, double s_cos2, double g) {
    double r2 = r * r;
    return r2 * s_cos2 + r2 * r2 * g * g;
}

}  // namespace

Vec4 link_point(const AngleTriple& t, const GeomConfig& cfg) {
    const double c1 = std::cos(t.theta1), c2 = std::cos(t.theta2), c3 = std::cos(t.theta3());
    const double s_cos2 = c1 * c1 + c2 * c2 + c3 * c3;
    if (s_cos2 < cfg.tol)
        throw NoRootError("all cosines vanish along this direction; no sphere intersection");
    const double g = toy_g(t);
    const double target = cfg.rho1 * cfg.rho1;

    double lo = 0;
    double hi = cfg.rho1 / std::sqrt(s_cos2) * (1 + 1e-9);
    // monotone in r, root in [lo, hi] by construction
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (link_radius_sq(mid, s_cos2, g) < target ? lo : hi) = mid;
    }
    double r = 0.5 * (lo + hi);
    return {r * c1, r * c2, r * c3, r * r * g};
}

Vec3 stereographic4(const Vec4& pt, double rho) {
    double d2 = pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2];
    double last = pt[3] + rho;
    if (std::sqrt(d2 + last * last) < 1e-9 * rho)
        throw AtCenterError("point coincides with the projection center");
    double s = 2 * rho / last;
    return {s * pt[0], s * pt[1], s * pt[2]};
}

Vec2 stereographic3(const Vec3& pt, double rho) {
    double d2 = pt[0] * pt[0] + pt[1] * pt[1];
    double last = pt[2] + rho;
    if (std::sqrt(d2 + last * last) < 1e-9 * rho)
        throw AtCenterError("point coincides with the projection center");
    double s = 2 * rho / last;
    return {s * pt[0], s * pt[1]};
}

std::vector<Vec3> trefoil_sphere_curve(const GeomConfig& cfg) {
    // Orthonormal basis of the disk plane {sum theta_a = 0}.
    const double e1[3] = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
    const double e2[3] = {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};
    const double target = cfg.rho1 * cfg.rho1;
    const double r_max = 0.98;
    const int march_steps = 256;

    auto at_radius = [&](double r, double cphi, double sphi) {
        return AngleTriple{r * (cphi * e1[0] + sphi * e2[0]), r * (cphi * e1[1] + sphi * e2[1])};
    };
    auto image_norm_sq = [&](double r, double cphi, double sphi) {
        Vec3 v = toy_F(at_radius(r, cphi, sphi));
        return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    };

    std::vector<Vec3> out;
    out.reserve(cfg.ray_samples + 1);
    for (int k = 0; k <= cfg.ray_samples; ++k) {
        // half-step offset: the six wall rays sit at multiples of pi/3, and
        // with an even sample count the offset keeps every double point in a
        // segment interior instead of exactly on a shared vertex
        double phi = 2 * M_PI * (k + 0.5) / cfg.ray_samples;
        double cphi = std::cos(phi), sphi = std::sin(phi);

        // march outward to bracket the first crossing; the value must be
        // monotone up to it, otherwise rho1 is outside the safe regime
        double lo = 0, hi = -1, prev = 0;
        for (int s = 1; s <= march_steps; ++s) {
            double r = r_max * s / march_steps;
            double v = image_norm_sq(r, cphi, sphi);
            if (v < prev - 1e-12)
                throw RootFindError("|F| not monotone along ray before crossing; rho1 too large");
            if (v >= target) {
                hi = r;
                break;
            }
            lo = r;
            prev = v;
        }
        if (hi < 0) throw RootFindError("ray never reaches the sphere radius; rho1 too large");

        while (hi - lo > 1e-13) {
            double mid = 0.5 * (lo + hi);
            (image_norm_sq(mid, cphi, sphi) < target ? lo : hi) = mid;
        }
        out.push_back(toy_F(at_radius(0.5 * (lo + hi), cphi, sphi)));
    }
    return out;
}

Polyline2 trefoil_polyline(const GeomConfig& cfg) {
    Polyline2 out;
    for (const Vec3& p : trefoil_sphere_curve(cfg)) out.pts.push_back(stereographic3(p, cfg.rho1));
    return out;
}

namespace {

struct SurfaceSampler {
    const GeomConfig& cfg;
    int base;  // base torus grid per axis

    Vec3 eval(double u, double v) const {
        AngleTriple t{2 * M_PI * u, 2 * M_PI * v};
        return stereographic4(link_point(t, cfg), cfg.rho1);
    }
};

VoxelGrid::ComponentCount count_at(const SurfaceSampler& s, int res, double box_scale,
                                   const std::vector<Vec3>& base_pts) {
    const int m = s.base;
    Vec3 lo = base_pts[0], hi = base_pts[0];
    for (const auto& p : base_pts)
        for (int a = 0; a < 3; ++a) {
            lo[a] = std::min(lo[a], p[a]);
            hi[a] = std::max(hi[a], p[a]);
        }

    // default padding 8% per side; box_scale inflates the whole padded box
    double margin_frac = 0.5 * (1.16 * box_scale - 1);
    VoxelGrid grid(lo, hi, res, margin_frac);

    const double fine = 0.7 * grid.cell();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const Vec3& p00 = base_pts[i * m + j];
            const Vec3& p10 = base_pts[((i + 1) % m) * m + j];
            const Vec3& p01 = base_pts[i * m + (j + 1) % m];
            const Vec3& p11 = base_pts[((i + 1) % m) * m + (j + 1) % m];
            double diam = std::max({norm(sub(p00, p10)), norm(sub(p00, p01)),
                                    norm(sub(p00, p11)), norm(sub(p10, p01))});
            int n_sub = std::clamp(static_cast<int>(std::ceil(diam / fine)), 1, 48);
            if (n_sub == 1) {
                grid.mark(p00);
                continue;
            }
            for (int a = 0; a <= n_sub; ++a)
                for (int b = 0; b <= n_sub; ++b)
                    grid.mark(s.eval((i + static_cast<double>(a) / n_sub) / m,
                                     (j + static_cast<double>(b) / n_sub) / m));
        }
    }

    grid.dilate_once();
    grid.close_once();
    return grid.complement_components();
}

}  // namespace

LinkRegionCount link_regions_3d(const GeomConfig& cfg, double box_scale) {
    SurfaceSampler sampler{cfg, std::max(512, 2 * cfg.grid_res)};
    const int m = sampler.base;

    std::vector<Vec3> base_pts(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            base_pts[static_cast<std::size_t>(i) * m + j] =
                sampler.eval(static_cast<double>(i) / m, static_cast<double>(j) / m);

    auto base = count_at(sampler, cfg.grid_res, box_scale, base_pts);
    auto fine = count_at(sampler, 2 * cfg.grid_res, box_scale, base_pts);

    LinkRegionCount out;
    out.total = base.total;
    out.bounded = base.bounded;
    out.unbounded = base.unbounded;
    out.stable = base.total == fine.total && base.bounded == fine.bounded &&
                 base.unbounded == fine.unbounded;
    return out;
}

}  // namespace pants::geom
