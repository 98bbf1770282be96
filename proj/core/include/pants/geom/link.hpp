#pragma once

#include "pants/geom/polyline.hpp"
#include "pants/geom/skeleton.hpp"

namespace pants::geom {

/// The front-projected cone over the torus link, parametrized by
/// (r, theta) -> (r cos t1, r cos t2, r cos t3, r^2 g(theta)). Returns the
/// unique point at sphere radius rho1: |image|^2 = r^2 S + r^4 g^2 with
/// S = sum cos^2 t_a is strictly increasing in r whenever S > 0, so bisection
/// has one root. Throws NoRootError when S < tol (directions that never
/// occur on the link).
Vec4 link_point(const AngleTriple& t, const GeomConfig& cfg);

/// Stereographic projection of the radius-rho sphere in R^4 from the center
/// c = (0,0,0,-rho) onto the hyperplane through the antipode. Bijective off
/// c; an equator point lands at norm exactly 2 rho. Throws AtCenterError.
Vec3 stereographic4(const Vec4& pt, double rho);

/// Same projection one dimension down: sphere in R^3 from (0,0,-rho).
Vec2 stereographic3(const Vec3& pt, double rho);

/// The link of the model surface F(D) on the radius-rho1 sphere in R^3: for
/// ray_samples directions in the disk plane, root-find |F(r u(phi))| = rho1
/// and map through F. Closed (last point recomputes the first). Throws
/// RootFindError if |F| fails to be monotone before the crossing radius
/// (rho1 too large).
std::vector<Vec3> trefoil_sphere_curve(const GeomConfig& cfg);

/// The planar trefoil diagram: trefoil_sphere_curve projected
/// stereographically from the bottom sphere point (0, 0, -rho1). The result
/// is the closed immersed curve with three transverse crossings.
Polyline2 trefoil_polyline(const GeomConfig& cfg);

struct LinkRegionCount {
    int total = 0;
    int bounded = 0;
    int unbounded = 0;
    bool stable = false;  // counts unchanged when grid_res doubles
};

/// Count complementary components of the projected link surface in R^3:
/// sample the surface on an (adaptively refined) torus grid of at least
/// 512^2 through link_point + stereographic4, mark occupied voxels with one
/// dilation step and a closing, flood-fill the complement 6-connected.
/// box_scale inflates the bounding box (counts must not depend on it once
/// the surface is enclosed).
LinkRegionCount link_regions_3d(const GeomConfig& cfg, double box_scale = 1.0);

}  // namespace pants::geom
