#pragma once

#include <cstdint>
#include <vector>

#include "pants/geom/forms.hpp"

namespace pants::geom {

/// Cubic occupancy grid over an axis-aligned box. The box is required to
/// strictly contain every marked point (enforced by construction margin).
class VoxelGrid {
  public:
    VoxelGrid(const Vec3& lo, const Vec3& hi, int res, double margin_frac);

    int res() const { return res_; }
    double cell() const { return cell_; }

    void mark(const Vec3& p);
    bool contains(const Vec3& p) const;

    /// Morphological dilation by one voxel (26-neighborhood box element).
    void dilate_once();

    /// Morphological closing (dilate, then erode, box element): fills
    /// sub-resolution slits and cavities inside the marked sheet without
    /// growing its outer boundary. Without this, the free layer between the
    /// two near-tangent sheets of an immersed surface pinches off into
    /// single-voxel dust at fine resolutions.
    void close_once();

    struct ComponentCount {
        int total = 0;
        int bounded = 0;
        int unbounded = 0;
    };

    /// Connected components of the unoccupied cells, 6-connected; a
    /// component is unbounded when it touches the grid frame.
    ComponentCount complement_components() const;

  private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * res_ + j) * res_ + i;
    }
    bool test(std::size_t id) const { return bits_[id >> 6] >> (id & 63) & 1; }
    void set(std::size_t id) { bits_[id >> 6] |= std::uint64_t{1} << (id & 63); }

    int res_;
    Vec3 origin_;
    double cell_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace pants::geom
