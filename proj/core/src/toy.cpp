#include "pants/geom/toy.hpp"

#include <cmath>

#include "pants/errors.hpp"

namespace pants::geom {

bool in_disk(const AngleTriple& t) {
    double t3 = t.theta3();
    return t.theta1 * t.theta1 + t.theta2 * t.theta2 + t3 * t3 < 1.0;
}

Vec2 toy_f(const AngleTriple& t) {
    double c1 = std::cos(t.theta1), c2 = std::cos(t.theta2), c3 = std::cos(t.theta3());
    return {c1 - c2, c2 - c3};
}

double toy_g(const AngleTriple& t) {
    const double th[3] = {t.theta1, t.theta2, t.theta3()};
    double s = 0;
    for (double a : th) s += std::cos(a) * std::sin(a);
    return s;
}

Vec3 toy_F(const AngleTriple& t) {
    Vec2 f = toy_f(t);
    return {f[0], f[1], toy_g(t)};
}

Vec2 toy_g_gradient(const AngleTriple& t) {
    // g = (1/2) sum sin(2 theta_a) with theta3 = -theta1 - theta2.
    double c3 = std::cos(2 * t.theta3());
    return {std::cos(2 * t.theta1) - c3, std::cos(2 * t.theta2) - c3};
}

ToyDefects toy_property_defects(const AngleTriple& t) {
    if (!in_disk(t)) throw OutsideDomainError("angle triple outside the unit disk");
    AngleTriple neg{-t.theta1, -t.theta2};

    ToyDefects d{};
    d.quotient = norm(sub(toy_f(t), toy_f(neg)));
    d.odd = std::fabs(toy_g(neg) + toy_g(t));

    constexpr double on_wall = 1e-12;
    double t3 = t.theta3();
    if (std::fabs(t.theta1) < on_wall || std::fabs(t.theta2) < on_wall || std::fabs(t3) < on_wall)
        d.wall_zero = std::fabs(toy_g(t));
    return d;
}

}  // namespace pants::geom
