#include "pants/geom/skeleton.hpp"

#include <algorithm>
#include <cmath>

#include "pants/errors.hpp"

namespace pants::geom {

double wrap_angle(double x) {
    constexpr double two_pi = 2 * M_PI;
    double r = std::fmod(x, two_pi);
    if (r <= -M_PI) r += two_pi;
    if (r > M_PI) r -= two_pi;
    return r;
}

double circle_distance_to_zero(double x) { return std::fabs(wrap_angle(x)); }

double wall_distance(const AngleTriple& t) {
    return std::min({circle_distance_to_zero(t.theta1), circle_distance_to_zero(t.theta2),
                     circle_distance_to_zero(t.theta3())});
}

double torus_distance(const AngleTriple& a, const AngleTriple& b) {
    double d1 = circle_distance_to_zero(a.theta1 - b.theta1);
    double d2 = circle_distance_to_zero(a.theta2 - b.theta2);
    return std::sqrt(d1 * d1 + d2 * d2);
}

SkeletonPoint SkeletonPoint::at(double r, const AngleTriple& angles) {
    SkeletonPoint pt;
    pt.r = r;
    pt.angles = angles;
    const double th[3] = {angles.theta1, angles.theta2, angles.theta3()};
    for (int a = 0; a < 3; ++a) {
        pt.ambient[2 * a] = r * std::cos(th[a]);
        pt.ambient[2 * a + 1] = r * std::sin(th[a]);
    }
    return pt;
}

double lagrangian_defect(const SkeletonPoint& pt) {
    if (pt.r <= 0) throw DegeneratePointError("skeleton point on the cone point (r <= 0)");
    const double th[3] = {pt.angles.theta1, pt.angles.theta2, pt.angles.theta3()};
    double c[3], s[3];
    for (int a = 0; a < 3; ++a) {
        c[a] = std::cos(th[a]);
        s[a] = std::sin(th[a]);
    }

    // d/dr and d/dtheta_a pushed to ambient coordinates.
    Vec6 dr{c[0], s[0], c[1], s[1], c[2], s[2]};
    auto dtheta = [&](int a) {
        Vec6 v{};
        v[2 * a] = -pt.r * s[a];
        v[2 * a + 1] = pt.r * c[a];
        return v;
    };
    Vec6 d12 = sub(dtheta(0), dtheta(1));
    Vec6 d23 = sub(dtheta(1), dtheta(2));

    const Vec6 frame[3] = {dr, d12, d23};
    double defect = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            defect = std::max(defect, std::fabs(symplectic_form(frame[i], frame[j])));
    return defect;
}

double fiber_primitive_defect(const Vec6& z, const Vec6& v) {
    for (int a = 0; a < 3; ++a)
        if (v[2 * a] != 0.0)
            throw NotFiberDirectionError("direction has a dx component, not tangent to the fiber");

    constexpr double h = 1e-5;
    Vec6 zp = z, zm = z;
    for (int i = 0; i < 6; ++i) {
        zp[i] += h * v[i];
        zm[i] -= h * v[i];
    }
    double directional = (fiber_primitive(zp) - fiber_primitive(zm)) / (2 * h);
    return std::fabs(directional - liouville_primitive(z, v));
}

}  // namespace pants::geom
