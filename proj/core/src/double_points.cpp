#include "pants/geom/double_points.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_map>

namespace pants::geom {

namespace {

constexpr double kMinSeparation = 0.1;  // domain separation of a genuine pair
constexpr double kConverged = 1e-11;

// image-space pairing radius; the model map contracts quadratically near the
// origin, so its radius is kept small to avoid pairing the whole cluster
double capture_radius(ChartMap map) { return map == ChartMap::ToyF ? 0.02 : 0.1; }

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

AngleTriple wrap_triple(const AngleTriple& t) {
    return {wrap_angle(t.theta1), wrap_angle(t.theta2)};
}

bool in_domain(ChartMap map, const AngleTriple& t) {
    return map != ChartMap::ToyF || in_disk(t);
}

// Solve the 4x4 system s*x = rhs in place; returns false when singular.
bool solve4(double s[4][4], double rhs[4], double x[4]) {
    int perm[4] = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
        int p = k;
        for (int i = k + 1; i < 4; ++i)
            if (std::fabs(s[perm[i]][k]) > std::fabs(s[perm[p]][k])) p = i;
        std::swap(perm[k], perm[p]);
        double piv = s[perm[k]][k];
        if (std::fabs(piv) < 1e-300) return false;
        for (int i = k + 1; i < 4; ++i) {
            double f = s[perm[i]][k] / piv;
            if (f == 0) continue;
            for (int j = k; j < 4; ++j) s[perm[i]][j] -= f * s[perm[k]][j];
            rhs[perm[i]] -= f * rhs[perm[k]];
        }
    }
    for (int k = 3; k >= 0; --k) {
        double acc = rhs[perm[k]];
        for (int j = k + 1; j < 4; ++j) acc -= s[perm[k]][j] * x[j];
        x[k] = acc / s[perm[k]][k];
    }
    return true;
}

struct PairState {
    AngleTriple a, b;
    double residual = 0;
};

double residual_vec(ChartMap map, const AngleTriple& a, const AngleTriple& b, double* res) {
    const int d = map_codomain_dim(map);
    double ia[4], ib[4];
    eval_chart_map(map, a, ia);
    eval_chart_map(map, b, ib);
    double n2 = 0;
    for (int i = 0; i < d; ++i) {
        res[i] = ia[i] - ib[i];
        n2 += res[i] * res[i];
    }
    return n2;
}

// Damped Gauss-Newton on map(a) - map(b) = 0 over (a, b). The solution set
// is a curve, so this converges to a nearby point of the locus.
bool refine(ChartMap map, PairState& st) {
    const int d = map_codomain_dim(map);
    double lambda = 1e-12;
    double res[4];
    double n2 = residual_vec(map, st.a, st.b, res);

    for (int iter = 0; iter < 60; ++iter) {
        if (std::sqrt(n2) < 1e-14) break;
        SmallMat ja = jacobian(map, st.a), jb = jacobian(map, st.b);
        double j[4][4];  // d x 4: [ja | -jb]
        for (int i = 0; i < d; ++i) {
            j[i][0] = ja.a[i][0];
            j[i][1] = ja.a[i][1];
            j[i][2] = -jb.a[i][0];
            j[i][3] = -jb.a[i][1];
        }
        double jtj[4][4], jtr[4];
        for (int p = 0; p < 4; ++p) {
            jtr[p] = 0;
            for (int i = 0; i < d; ++i) jtr[p] += j[i][p] * res[i];
            for (int q = 0; q < 4; ++q) {
                double s = 0;
                for (int i = 0; i < d; ++i) s += j[i][p] * j[i][q];
                jtj[p][q] = s;
            }
        }
        bool stepped = false;
        for (int attempt = 0; attempt < 8 && !stepped; ++attempt) {
            double s[4][4], rhs[4], delta[4];
            for (int p = 0; p < 4; ++p) {
                for (int q = 0; q < 4; ++q) s[p][q] = jtj[p][q];
                s[p][p] += lambda * (1 + jtj[p][p]);
                rhs[p] = -jtr[p];
            }
            if (solve4(s, rhs, delta)) {
                PairState trial = st;
                trial.a.theta1 += delta[0];
                trial.a.theta2 += delta[1];
                trial.b.theta1 += delta[2];
                trial.b.theta2 += delta[3];
                double tres[4];
                double tn2 = residual_vec(map, trial.a, trial.b, tres);
                if (tn2 < n2 && in_domain(map, trial.a) && in_domain(map, trial.b)) {
                    st = trial;
                    n2 = tn2;
                    std::copy(tres, tres + 4, res);
                    lambda = std::max(lambda * 0.25, 1e-14);
                    stepped = true;
                }
            }
            if (!stepped) lambda *= 10;
        }
        if (!stepped) break;
    }
    st.residual = std::sqrt(n2);
    return st.residual < kConverged;
}

struct CellKey {
    std::int64_t k[4];
    bool operator==(const CellKey&) const = default;
};
struct CellHash {
    std::size_t operator()(const CellKey& c) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : c.k) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

DoublePointReport double_point_report(ChartMap map, int sample_count, const GeomConfig& cfg,
                                      const DomainPatch& patch) {
    DoublePointReport report;
    std::mt19937_64 rng(cfg.seed);
    const int d = map_codomain_dim(map);

    std::vector<AngleTriple> pts;
    std::vector<std::array<double, 4>> images;
    pts.reserve(sample_count);

    long attempts = 0;
    const long max_attempts = 200L * sample_count;
    while (static_cast<int>(pts.size()) < sample_count && attempts++ < max_attempts) {
        AngleTriple t;
        if (map == ChartMap::ToyF) {
            t = {2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1};
            if (!in_disk(t)) continue;
        } else {
            t = {wrap_angle(2 * M_PI * uniform01(rng)), wrap_angle(2 * M_PI * uniform01(rng))};
        }
        if (patch && !patch(t)) continue;
        std::array<double, 4> img{};
        eval_chart_map(map, t, img.data());
        pts.push_back(t);
        images.push_back(img);
    }
    report.samples = static_cast<int>(pts.size());

    // Spatial hash on images; candidate pairs share a cell neighborhood.
    std::unordered_map<CellKey, std::vector<int>, CellHash> grid;
    auto cell_of = [&](const std::array<double, 4>& p) {
        CellKey c{};
        for (int i = 0; i < d; ++i) c.k[i] = static_cast<std::int64_t>(std::floor(p[i] / kCaptureRadius));
        return c;
    };
    for (int i = 0; i < report.samples; ++i) grid[cell_of(images[i])].push_back(i);

    std::set<std::array<std::int64_t, 4>> seen;
    auto dedupe_key = [](const AngleTriple& a, const AngleTriple& b) {
        auto q = [](double x) { return static_cast<std::int64_t>(std::llround(x / 2e-3)); };
        std::array<std::int64_t, 4> ka{q(a.theta1), q(a.theta2), q(b.theta1), q(b.theta2)};
        std::array<std::int64_t, 4> kb{ka[2], ka[3], ka[0], ka[1]};
        return std::min(ka, kb);
    };

    for (int i = 0; i < report.samples; ++i) {
        CellKey base = cell_of(images[i]);
        // neighbor cells in the d occupied coordinates
        std::int64_t lo[4], hi[4];
        for (int k = 0; k < 4; ++k) {
            lo[k] = base.k[k] - (k < d ? 1 : 0);
            hi[k] = base.k[k] + (k < d ? 1 : 0);
        }
        for (std::int64_t c0 = lo[0]; c0 <= hi[0]; ++c0)
            for (std::int64_t c1 = lo[1]; c1 <= hi[1]; ++c1)
                for (std::int64_t c2 = lo[2]; c2 <= hi[2]; ++c2)
                    for (std::int64_t c3 = lo[3]; c3 <= hi[3]; ++c3) {
                        auto it = grid.find(CellKey{{c0, c1, c2, c3}});
                        if (it == grid.end()) continue;
                        for (int j : it->second) {
                            if (j <= i) continue;
                            double img2 = 0;
                            for (int k = 0; k < d; ++k) {
                                double dk = images[i][k] - images[j][k];
                                img2 += dk * dk;
                            }
                            if (img2 > kCaptureRadius * kCaptureRadius) continue;
                            if (torus_distance(pts[i], pts[j]) < kMinSeparation) continue;

                            ++report.candidates;
                            PairState st{pts[i], pts[j]};
                            if (!refine(map, st)) continue;
                            AngleTriple a = wrap_triple(st.a), b = wrap_triple(st.b);
                            if (torus_distance(a, b) < kMinSeparation) continue;
                            if (patch && (!patch(a) || !patch(b))) continue;
                            if (!seen.insert(dedupe_key(a, b)).second) continue;

                            DoublePoint dp;
                            dp.a = a;
                            dp.b = b;
                            dp.residual = st.residual;
                            dp.wall_distance = std::max(wall_distance(a), wall_distance(b));
                            SmallMat ja = jacobian(map, a), jb = jacobian(map, b);
                            SmallMat combined;
                            combined.rows = d;
                            combined.cols = 4;
                            for (int r = 0; r < d; ++r) {
                                combined.a[r][0] = ja.a[r][0];
                                combined.a[r][1] = ja.a[r][1];
                                combined.a[r][2] = jb.a[r][0];
                                combined.a[r][3] = jb.a[r][1];
                            }
                            auto sv = singular_values(combined);
                            int rank = 0;
                            for (double s : sv)
                                if (s > cfg.jacobian_tol) ++rank;
                            dp.transverse = (rank == 3);
                            report.points.push_back(dp);
                        }
                    }
    }
    return report;
}

}  // namespace pants::geom
