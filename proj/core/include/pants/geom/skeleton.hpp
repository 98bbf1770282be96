#pragma once

#include "pants/errors.hpp"
#include "pants/geom/forms.hpp"

namespace pants::geom {

/// Point of the angular torus {theta1 + theta2 + theta3 = 0}; the third
/// angle is derived, so the constraint holds exactly by construction.
struct AngleTriple {
    double theta1 = 0;
    double theta2 = 0;
    double theta3() const { return -theta1 - theta2; }
};

/// Wrap to (-pi, pi].
double wrap_angle(double x);

/// Distance of x to 0 on the circle R/2piZ.
double circle_distance_to_zero(double x);

/// min_a dist(theta_a, 0 mod 2pi): distance to the wall {some theta_a = 0}.
double wall_distance(const AngleTriple& t);

/// Euclidean torus distance in the (theta1, theta2) chart.
double torus_distance(const AngleTriple& a, const AngleTriple& b);

/// Point of the conic skeleton L = {(r e^{i theta_1}, r e^{i theta_2},
/// r e^{i theta_3})} with its ambient coordinates.
struct SkeletonPoint {
    double r = 0;
    AngleTriple angles;
    Vec6 ambient{};  // x_a = r cos theta_a, y_a = r sin theta_a

    static SkeletonPoint at(double r, const AngleTriple& angles);
};

/// Max of |omega(u, v)| over the canonical tangent frame of L at pt, pushed
/// to ambient coordinates: {d/dr, d/dtheta1 - d/dtheta2, d/dtheta2 -
/// d/dtheta3}. Zero means L is Lagrangian at this point.
/// Throws DegeneratePointError if r <= 0 (the cone point).
double lagrangian_defect(const SkeletonPoint& pt);

/// |D_v f(z) - alpha(v at z)| for a fiber direction v of the base
/// projection (all dx_a components zero), D_v by central difference with
/// step 1e-5. Throws NotFiberDirectionError when v has an x-component.
double fiber_primitive_defect(const Vec6& z, const Vec6& v);

}  // namespace pants::geom
