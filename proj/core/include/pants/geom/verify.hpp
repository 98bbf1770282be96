#pragma once

#include <string>
#include <vector>

#include "pants/geom/config.hpp"

namespace pants::geom {

struct GeomCheck {
    std::string name;
    double value = 0;        // observed extremum (or count)
    double threshold = 0;
    bool greater_is_pass = false;  // default: pass iff value < threshold
    bool pass = false;
    long samples = 0;
};

/// The five identity families, sampled: quotient and odd defects of the
/// model maps, the wall zero-defect, the Lagrangian defect of the cone
/// (including dilations), and the fiber-primitive defect. All compare
/// against cfg.tol.
std::vector<GeomCheck> identity_checks(const GeomConfig& cfg);

/// Rank structure of the projections: second singular value at the four
/// ramification points (must vanish numerically), full rank on samples
/// bounded 0.1 away from them, and the rank drop of the model map at the
/// origin. Thresholds from cfg.jacobian_tol.
std::vector<GeomCheck> rank_checks(const GeomConfig& cfg);

/// Double-point structure: every detected double point of the front
/// projection and the model map lies on the wall and is transverse, and a
/// wall-free patch of the base projection yields none.
std::vector<GeomCheck> double_point_checks(const GeomConfig& cfg);

/// All of the above, in order.
std::vector<GeomCheck> run_geometry_suite(const GeomConfig& cfg);

}  // namespace pants::geom
