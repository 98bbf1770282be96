#pragma once

#include <cstdint>
#include <stdexcept>

namespace pants::geom {

/// Every "small enough" constant the construction leaves open, pinned to a
/// concrete value. rho1 sits inside the regime where the ray root-finding
/// below is strictly monotone; that is asserted at runtime, not assumed.
struct GeomConfig {
    double rho1 = 0.1;           // link-sphere radius
    double tol = 1e-9;           // identity-check tolerance
    double jacobian_tol = 1e-6;  // numerical-rank threshold on singular values
    int samples = 10000;         // Monte-Carlo sample count
    int ray_samples = 2048;      // polyline resolution (directions per full turn)
    int grid_res = 96;           // cells per axis for region counting
    std::uint64_t seed = 12345;

    /// Throws std::invalid_argument naming the first bad field.
    void require_valid() const {
        if (!(rho1 > 0)) throw std::invalid_argument("rho1 must be positive");
        if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
        if (!(jacobian_tol > 0)) throw std::invalid_argument("jacobian-tol must be positive");
        if (samples < 1) throw std::invalid_argument("samples must be at least 1");
        if (ray_samples < 16) throw std::invalid_argument("ray-samples must be at least 16");
        if (ray_samples % 2 != 0) throw std::invalid_argument("ray-samples must be even");
        if (grid_res < 8) throw std::invalid_argument("grid-res must be at least 8");
    }
};

}  // namespace pants::geom
