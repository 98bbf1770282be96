#include "pants/geom/numderiv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pants/errors.hpp"

namespace pants::geom {

std::vector<double> singular_values(SmallMat m) {
    const int n = m.cols;
    auto col_dot = [&](int p, int q) {
        double s = 0;
        for (int i = 0; i < m.rows; ++i) s += m.a[i][p] * m.a[i][q];
        return s;
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double alpha = col_dot(p, p), beta = col_dot(q, q), gamma = col_dot(p, q);
                double denom = std::sqrt(alpha * beta);
                if (denom > 0) off = std::max(off, std::fabs(gamma) / denom);
                if (std::fabs(gamma) < 1e-300) continue;
                double zeta = (beta - alpha) / (2 * gamma);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t), s = c * t;
                for (int i = 0; i < m.rows; ++i) {
                    double vp = m.a[i][p], vq = m.a[i][q];
                    m.a[i][p] = c * vp - s * vq;
                    m.a[i][q] = s * vp + c * vq;
                }
            }
        }
        if (off < 1e-15) break;
    }

    std::vector<double> sv(n);
    for (int j = 0; j < n; ++j) sv[j] = std::sqrt(col_dot(j, j));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

int map_codomain_dim(ChartMap map) {
    switch (map) {
        case ChartMap::BaseOnTorus: return 3;
        case ChartMap::FrontOnTorus: return 4;
        case ChartMap::ToyF: return 3;
    }
    return 0;
}

void eval_chart_map(ChartMap map, const AngleTriple& t, double* out) {
    switch (map) {
        case ChartMap::BaseOnTorus:
            out[0] = std::cos(t.theta1);
            out[1] = std::cos(t.theta2);
            out[2] = std::cos(t.theta3());
            return;
        case ChartMap::FrontOnTorus:
            out[0] = std::cos(t.theta1);
            out[1] = std::cos(t.theta2);
            out[2] = std::cos(t.theta3());
            out[3] = toy_g(t);
            return;
        case ChartMap::ToyF: {
            Vec3 v = toy_F(t);
            out[0] = v[0];
            out[1] = v[1];
            out[2] = v[2];
            return;
        }
    }
}

SmallMat jacobian(ChartMap map, const AngleTriple& t, double step) {
    SmallMat j;
    j.rows = map_codomain_dim(map);
    j.cols = 2;
    double plus[4], minus[4];
    for (int k = 0; k < 2; ++k) {
        AngleTriple tp = t, tm = t;
        (k == 0 ? tp.theta1 : tp.theta2) += step;
        (k == 0 ? tm.theta1 : tm.theta2) -= step;
        eval_chart_map(map, tp, plus);
        eval_chart_map(map, tm, minus);
        for (int i = 0; i < j.rows; ++i) j.a[i][k] = (plus[i] - minus[i]) / (2 * step);
    }
    return j;
}

RankProfile jacobian_rank_profile(ChartMap map, const AngleTriple& t, const GeomConfig& cfg) {
    if (map == ChartMap::ToyF && !in_disk(t))
        throw OutsideDomainError("angle triple outside the unit disk");
    RankProfile rp;
    rp.sv = singular_values(jacobian(map, t));
    for (double s : rp.sv)
        if (s > cfg.jacobian_tol) ++rp.rank;
    return rp;
}

const std::vector<AngleTriple>& ramification_points() {
    static const std::vector<AngleTriple> pts = {
        {0, 0}, {0, M_PI}, {M_PI, 0}, {M_PI, M_PI}};
    return pts;
}

double distance_to_ramification(const AngleTriple& t) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& r : ramification_points()) d = std::min(d, torus_distance(t, r));
    return d;
}

}  // namespace pants::geom
