#include "pants/geom/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <tuple>

#include "pants/errors.hpp"

namespace pants::geom {

namespace {

double cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

struct Seg {
    Vec2 a, b;
    std::size_t idx;
    double minx, maxx, miny, maxy;
};

}  // namespace

CrossingReport polyline_crossings(const Polyline2& p, double tol) {
    const std::size_t n = p.pts.size();
    if (n < 4) return {};
    const std::size_t nseg = n - 1;  // closed: pts[n-1] ~ pts[0]

    std::vector<Seg> segs(nseg);
    double scale = 0;
    for (std::size_t i = 0; i < nseg; ++i) {
        Seg& s = segs[i];
        s.a = p.pts[i];
        s.b = p.pts[i + 1];
        s.idx = i;
        s.minx = std::min(s.a[0], s.b[0]);
        s.maxx = std::max(s.a[0], s.b[0]);
        s.miny = std::min(s.a[1], s.b[1]);
        s.maxy = std::max(s.a[1], s.b[1]);
        scale = std::max({scale, std::fabs(s.a[0]), std::fabs(s.a[1])});
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& l, const Seg& r) { return l.minx < r.minx; });

    auto adjacent = [&](std::size_t i, std::size_t j) {
        std::size_t d = i < j ? j - i : i - j;
        return d == 1 || d == nseg - 1;  // consecutive, including the seam
    };

    const double degenerate_area = 1e-13 * std::max(scale * scale, 1e-30);
    CrossingReport report;
    for (std::size_t i = 0; i < nseg; ++i) {
        const Seg& s = segs[i];
        for (std::size_t j = i + 1; j < nseg && segs[j].minx <= s.maxx; ++j) {
            const Seg& t = segs[j];
            if (t.miny > s.maxy || t.maxy < s.miny) continue;
            if (adjacent(s.idx, t.idx)) continue;

            double d1 = cross2(s.a, s.b, t.a);
            double d2 = cross2(s.a, s.b, t.b);
            double d3 = cross2(t.a, t.b, s.a);
            double d4 = cross2(t.a, t.b, s.b);
            bool opp1 = (d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0);
            bool opp2 = (d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0);
            if (opp1 && opp2) {
                // near-tangent contact: endpoint orientation nearly zero
                if (std::min({std::fabs(d1), std::fabs(d2), std::fabs(d3), std::fabs(d4)}) <
                    degenerate_area)
                    throw DegenerateCrossingError("non-transverse segment contact");
                double u = d1 / (d1 - d2);
                Crossing c;
                c.where = {t.a[0] + u * (t.b[0] - t.a[0]), t.a[1] + u * (t.b[1] - t.a[1])};
                c.seg_a = std::min(s.idx, t.idx);
                c.seg_b = std::max(s.idx, t.idx);
                report.crossings.push_back(c);
            }
        }
    }

    for (std::size_t i = 0; i < report.crossings.size(); ++i)
        for (std::size_t j = i + 1; j < report.crossings.size(); ++j)
            if (norm(sub(report.crossings[i].where, report.crossings[j].where)) < tol)
                throw DegenerateCrossingError("two crossings within tol; raise the resolution");

    std::sort(report.crossings.begin(), report.crossings.end(),
              [](const Crossing& a, const Crossing& b) {
                  return std::tie(a.seg_a, a.seg_b) < std::tie(b.seg_a, b.seg_b);
              });
    return report;
}

namespace {

struct Grid2 {
    int res;
    double x0, y0, cell;
    std::vector<char> occ;

    int clampi(int v) const { return std::clamp(v, 0, res - 1); }
    int cx(double x) const { return clampi(static_cast<int>(std::floor((x - x0) / cell))); }
    int cy(double y) const { return clampi(static_cast<int>(std::floor((y - y0) / cell))); }
    char& at(int i, int j) { return occ[static_cast<std::size_t>(j) * res + i]; }
};

// Supercover walk: marks every cell the segment passes through, stepping one
// axis at a time so the marked chain is 4-connected.
void mark_segment(Grid2& g, const Vec2& a, const Vec2& b) {
    int i = g.cx(a[0]), j = g.cy(a[1]);
    int i1 = g.cx(b[0]), j1 = g.cy(b[1]);
    g.at(i, j) = 1;

    double dx = b[0] - a[0], dy = b[1] - a[1];
    int sx = dx > 0 ? 1 : -1, sy = dy > 0 ? 1 : -1;
    double tmx = dx != 0 ? ((g.x0 + (i + (sx > 0 ? 1 : 0)) * g.cell) - a[0]) / dx
                         : std::numeric_limits<double>::infinity();
    double tmy = dy != 0 ? ((g.y0 + (j + (sy > 0 ? 1 : 0)) * g.cell) - a[1]) / dy
                         : std::numeric_limits<double>::infinity();
    double tdx = dx != 0 ? g.cell / std::fabs(dx) : 0;
    double tdy = dy != 0 ? g.cell / std::fabs(dy) : 0;

    int guard = 4 * g.res;
    while ((i != i1 || j != j1) && guard-- > 0) {
        if (tmx <= tmy) {
            i += sx;
            tmx += tdx;
        } else {
            j += sy;
            tmy += tdy;
        }
        i = g.clampi(i);
        j = g.clampi(j);
        g.at(i, j) = 1;
    }
}

struct Counts {
    int total = 0, bounded = 0;
};

Counts count_regions_at(const Polyline2& p, int res) {
    double minx = p.pts[0][0], maxx = minx, miny = p.pts[0][1], maxy = miny;
    for (const auto& v : p.pts) {
        minx = std::min(minx, v[0]);
        maxx = std::max(maxx, v[0]);
        miny = std::min(miny, v[1]);
        maxy = std::max(maxy, v[1]);
    }
    double extent = std::max(maxx - minx, maxy - miny);
    double margin = 0.08 * extent;

    Grid2 g;
    g.res = res;
    g.cell = (extent + 2 * margin) / res;
    g.x0 = 0.5 * (minx + maxx) - 0.5 * res * g.cell;
    g.y0 = 0.5 * (miny + maxy) - 0.5 * res * g.cell;
    g.occ.assign(static_cast<std::size_t>(res) * res, 0);

    for (std::size_t k = 0; k + 1 < p.pts.size(); ++k) mark_segment(g, p.pts[k], p.pts[k + 1]);

    std::vector<char> seen(g.occ.size(), 0);
    std::vector<int> stack;
    Counts counts;
    for (int j = 0; j < res; ++j) {
        for (int i = 0; i < res; ++i) {
            std::size_t id = static_cast<std::size_t>(j) * res + i;
            if (g.occ[id] || seen[id]) continue;
            bool touches_frame = false;
            seen[id] = 1;
            stack.assign(1, static_cast<int>(id));
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                int ci = cur % res, cj = cur / res;
                if (ci == 0 || cj == 0 || ci == res - 1 || cj == res - 1) touches_frame = true;
                const int ni[4] = {ci - 1, ci + 1, ci, ci};
                const int nj[4] = {cj, cj, cj - 1, cj + 1};
                for (int k = 0; k < 4; ++k) {
                    if (ni[k] < 0 || nj[k] < 0 || ni[k] >= res || nj[k] >= res) continue;
                    std::size_t nid = static_cast<std::size_t>(nj[k]) * res + ni[k];
                    if (g.occ[nid] || seen[nid]) continue;
                    seen[nid] = 1;
                    stack.push_back(static_cast<int>(nid));
                }
            }
            ++counts.total;
            if (!touches_frame) ++counts.bounded;
        }
    }
    return counts;
}

}  // namespace

RegionCount region_count_2d(const Polyline2& p, const GeomConfig& cfg) {
    if (p.pts.size() < 4) throw Error("polyline too short for region counting");
    Counts base = count_regions_at(p, cfg.grid_res);
    Counts fine = count_regions_at(p, 2 * cfg.grid_res);
    RegionCount rc;
    rc.total = base.total;
    rc.bounded = base.bounded;
    rc.stable = base.total == fine.total && base.bounded == fine.bounded;
    return rc;
}

void write_csv(const Polyline2& p, std::ostream& os) {
    os << "x,y\n";
    char buf[80];
    for (const auto& v : p.pts) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v[0], v[1]);
        os << buf;
    }
}

void write_svg(const Polyline2& p, std::ostream& os) {
    double minx = p.pts[0][0], maxx = minx, miny = p.pts[0][1], maxy = miny;
    for (const auto& v : p.pts) {
        minx = std::min(minx, v[0]);
        maxx = std::max(maxx, v[0]);
        miny = std::min(miny, v[1]);
        maxy = std::max(maxy, v[1]);
    }
    double w = maxx - minx, h = maxy - miny;
    double mx = 0.05 * w, my = 0.05 * h;
    char buf[160];
    std::snprintf(buf, sizeof buf, "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.9g %.9g %.9g %.9g\">\n",
                  minx - mx, miny - my, w + 2 * mx, h + 2 * my);
    os << buf;
    os << "<path d=\"";
    for (std::size_t i = 0; i < p.pts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%c%.9g %.9g", i == 0 ? 'M' : 'L', p.pts[i][0], p.pts[i][1]);
        os << buf << (i + 1 < p.pts.size() ? " " : "");
    }
    std::snprintf(buf, sizeof buf, " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"%.9g\"/>\n",
                  std::max(w, h) / 400);
    os << buf;
    os << "</svg>\n";
}

}  // namespace pants::geom
