#pragma once

#include <vector>

#include "pants/geom/config.hpp"
#include "pants/geom/toy.hpp"

namespace pants::geom {

/// Tiny dense matrix for Jacobians; everything here is at most 4x4.
struct SmallMat {
    int rows = 0, cols = 0;
    double a[4][4] = {};
};

/// Singular values in descending order, by one-sided (Hestenes) Jacobi
/// column orthogonalization. Fine for the sizes in play; no dependency.
std::vector<double> singular_values(SmallMat m);

/// The three maps out of the angular charts whose rank behavior carries the
/// geometry: the base projection and the front projection restricted to the
/// torus link, and the model map F on the disk.
enum class ChartMap {
    BaseOnTorus,   // theta -> (cos t1, cos t2, cos t3)
    FrontOnTorus,  // theta -> (cos t1, cos t2, cos t3, g(theta))
    ToyF,          // theta in D -> (f, g)
};

int map_codomain_dim(ChartMap map);
void eval_chart_map(ChartMap map, const AngleTriple& t, double* out);

/// Central-difference Jacobian in the (theta1, theta2) chart.
SmallMat jacobian(ChartMap map, const AngleTriple& t, double step = 1e-6);

struct RankProfile {
    std::vector<double> sv;  // descending
    int rank = 0;            // count of sv > jacobian_tol
};

/// Throws OutsideDomainError for ToyF outside the disk.
RankProfile jacobian_rank_profile(ChartMap map, const AngleTriple& t, const GeomConfig& cfg);

/// The four ramification points of the torus projections, in the
/// (theta1, theta2) chart: (0,0), (0,pi), (pi,0), (pi,pi).
const std::vector<AngleTriple>& ramification_points();

/// Torus distance to the nearest ramification point.
double distance_to_ramification(const AngleTriple& t);

}  // namespace pants::geom
