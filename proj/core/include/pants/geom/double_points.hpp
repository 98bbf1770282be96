#pragma once

#include <functional>
#include <vector>

#include "pants/geom/numderiv.hpp"

namespace pants::geom {

struct DoublePoint {
    AngleTriple a, b;      // the two preimages, map(a) = map(b), a != b
    double residual;       // |map(a) - map(b)| after refinement
    double wall_distance;  // max over the pair of min_a dist(theta_a, 0 mod 2pi)
    bool transverse;       // the two tangent planes span rank 3 together
};

struct DoublePointReport {
    std::vector<DoublePoint> points;
    int samples = 0;
    int candidates = 0;  // pairs fed to refinement
};

/// Predicate restricting the sampled domain (empty = whole domain). Angles
/// are presented wrapped to (-pi, pi].
using DomainPatch = std::function<bool(const AngleTriple&)>;

/// Monte-Carlo double-point search: sample the domain, pair up samples whose
/// images nearly coincide, refine each candidate pair by damped Gauss-Newton
/// on map(a) - map(b) = 0, and report the refined pairs with wall-proximity
/// and transversality flags. Double points of these maps form curves, so the
/// report is a sampling of that locus, deduplicated at coarse resolution.
/// An empty report is a valid outcome (e.g. on an embedded patch).
DoublePointReport double_point_report(ChartMap map, int sample_count, const GeomConfig& cfg,
                                      const DomainPatch& patch = {});

}  // namespace pants::geom
