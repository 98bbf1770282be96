#pragma once

#include <iosfwd>
#include <vector>

#include "pants/geom/config.hpp"
#include "pants/errors.hpp"
#include "pants/geom/forms.hpp"

namespace pants::geom {

/// Closed planar curve: the last vertex repeats the first (up to floating
/// round-off of the closing parameter); consecutive vertices are distinct.
struct Polyline2 {
    std::vector<Vec2> pts;
};

struct Crossing {
    Vec2 where;
    std::size_t seg_a, seg_b;
};

struct CrossingReport {
    std::vector<Crossing> crossings;
    std::size_t count() const { return crossings.size(); }
};

/// Transverse self-intersections by an interval sweep over segment pairs,
/// cyclically adjacent segments excluded. Throws DegenerateCrossingError if
/// two crossings fall within tol of each other or an intersection is not
/// clearly transverse (both signal insufficient resolution).
CrossingReport polyline_crossings(const Polyline2& p, double tol = 1e-9);

struct RegionCount {
    int total = 0;
    int bounded = 0;
    bool stable = false;  // counts unchanged when the grid resolution doubles
};

/// Rasterize the curve onto a grid_res^2 grid (supercover, so the curve is a
/// closed barrier), flood-fill the complement 4-connected, count components.
/// Exactly one component touches the bounding frame: the unbounded one.
RegionCount region_count_2d(const Polyline2& p, const GeomConfig& cfg);

/// CSV: header "x,y", one vertex per line, C-locale decimal points.
void write_csv(const Polyline2& p, std::ostream& os);

/// SVG: a single path element, viewBox fitted with a 5% margin.
void write_svg(const Polyline2& p, std::ostream& os);

}  // namespace pants::geom
