#pragma once

#include <optional>

#include "pants/geom/skeleton.hpp"

namespace pants::geom {

// Model maps on the flat two-disk D = {theta1^2 + theta2^2 + theta3^2 < 1}
// inside the plane {sum theta_a = 0}:
//   f(theta) = (cos t1 - cos t2, cos t2 - cos t3)   (even)
//   g(theta) = sum_a cos(t_a) sin(t_a)              (odd; vanishes exactly
//                                                    on the wall)
//   F = (f, g) : D -> R^3

bool in_disk(const AngleTriple& t);

Vec2 toy_f(const AngleTriple& t);
double toy_g(const AngleTriple& t);
Vec3 toy_F(const AngleTriple& t);

/// Gradient of g in the (theta1, theta2) chart, closed form.
Vec2 toy_g_gradient(const AngleTriple& t);

struct ToyDefects {
    double quotient;                 // |f(theta) - f(-theta)|
    double odd;                      // |g(-theta) + g(theta)|
    std::optional<double> wall_zero; // |g(theta)| when some theta_a = 0
};

/// Throws OutsideDomainError when theta is not in D.
ToyDefects toy_property_defects(const AngleTriple& t);

}  // namespace pants::geom
