#pragma once

#include <array>
#include <cmath>

namespace pants::geom {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Vec6 = std::array<double, 6>;

// Ambient coordinates on C^3 = R^6 are interleaved: (x1, y1, x2, y2, x3, y3).

/// omega = sum_a dx_a ^ dy_a, evaluated on a pair of tangent vectors.
inline double symplectic_form(const Vec6& u, const Vec6& v) {
    double s = 0;
    for (int a = 0; a < 3; ++a) s += u[2 * a] * v[2 * a + 1] - u[2 * a + 1] * v[2 * a];
    return s;
}

/// alpha = sum_a (x_a dy_a - y_a dx_a), evaluated on v at the point z.
inline double liouville_primitive(const Vec6& z, const Vec6& v) {
    double s = 0;
    for (int a = 0; a < 3; ++a) s += z[2 * a] * v[2 * a + 1] - z[2 * a + 1] * v[2 * a];
    return s;
}

/// The Liouville field sum_a r_a d/dr_a (the radial field) at z.
inline Vec6 liouville_field(const Vec6& z) { return z; }

/// f(z) = sum_a x_a y_a; a primitive for alpha restricted to the fibers of
/// the base projection.
inline double fiber_primitive(const Vec6& z) {
    return z[0] * z[1] + z[2] * z[3] + z[4] * z[5];
}

/// Lagrangian fibration p(z) = (x1, x2, x3).
inline Vec3 project_base(const Vec6& z) { return {z[0], z[2], z[4]}; }

/// Legendrian fibration q(z, t) = (x1, x2, x3, t + sum x_a y_a).
inline Vec4 project_front(const Vec6& z, double t) {
    return {z[0], z[2], z[4], t + fiber_primitive(z)};
}

/// Contact form alpha - dt on C^3 x R, on the tangent vector (v, vt).
inline double contact_form(const Vec6& z, const Vec6& v, double vt) {
    return liouville_primitive(z, v) - vt;
}

inline double dot(const Vec6& a, const Vec6& b) {
    double s = 0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}

template <std::size_t N>
inline double norm(const std::array<double, N>& a) {
    double s = 0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

template <std::size_t N>
inline std::array<double, N> sub(const std::array<double, N>& a, const std::array<double, N>& b) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace pants::geom
