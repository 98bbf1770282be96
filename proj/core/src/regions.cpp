#include "pants/geom/regions.hpp"

#include <algorithm>
#include <cmath>

#include "pants/errors.hpp"

namespace pants::geom {

VoxelGrid::VoxelGrid(const Vec3& lo, const Vec3& hi, int res, double margin_frac) : res_(res) {
    double extent = 0;
    Vec3 center;
    for (int a = 0; a < 3; ++a) {
        extent = std::max(extent, hi[a] - lo[a]);
        center[a] = 0.5 * (lo[a] + hi[a]);
    }
    if (extent <= 0) throw Error("voxel grid needs a nondegenerate bounding box");
    double padded = extent * (1 + 2 * margin_frac);
    cell_ = padded / res;
    for (int a = 0; a < 3; ++a) origin_[a] = center[a] - 0.5 * padded;
    bits_.assign((static_cast<std::size_t>(res) * res * res + 63) / 64, 0);
}

bool VoxelGrid::contains(const Vec3& p) const {
    for (int a = 0; a < 3; ++a) {
        double c = (p[a] - origin_[a]) / cell_;
        if (c < 0 || c >= res_) return false;
    }
    return true;
}

void VoxelGrid::mark(const Vec3& p) {
    int c[3];
    for (int a = 0; a < 3; ++a) {
        double x = (p[a] - origin_[a]) / cell_;
        if (x < 0 || x >= res_) throw Error("sample escaped the voxel grid bounding box");
        c[a] = static_cast<int>(x);
    }
    set(index(c[0], c[1], c[2]));
}

void VoxelGrid::dilate_once() {
    std::vector<std::size_t> occupied;
    const std::size_t n = static_cast<std::size_t>(res_) * res_ * res_;
    for (std::size_t id = 0; id < n; ++id)
        if (test(id)) occupied.push_back(id);

    for (std::size_t id : occupied) {
        int i = static_cast<int>(id % res_);
        int j = static_cast<int>(id / res_ % res_);
        int k = static_cast<int>(id / res_ / res_);
        for (int dk = -1; dk <= 1; ++dk)
            for (int dj = -1; dj <= 1; ++dj)
                for (int di = -1; di <= 1; ++di) {
                    int ni = i + di, nj = j + dj, nk = k + dk;
                    if (ni < 0 || nj < 0 || nk < 0 || ni >= res_ || nj >= res_ || nk >= res_)
                        continue;
                    set(index(ni, nj, nk));
                }
    }
}

void VoxelGrid::close_once() {
    std::vector<std::uint64_t> before = bits_;
    dilate_once();
    // erode: keep a voxel only when its full 3^3 neighborhood is occupied
    // (outside the grid counts as empty); voxels occupied before closing
    // always survive
    std::vector<std::uint64_t> dilated = bits_;
    auto dil = [&](std::size_t id) { return dilated[id >> 6] >> (id & 63) & 1; };
    auto was = [&](std::size_t id) { return before[id >> 6] >> (id & 63) & 1; };

    const std::size_t n = static_cast<std::size_t>(res_) * res_ * res_;
    for (std::size_t id = 0; id < n; ++id) {
        if (!dil(id) || was(id)) continue;
        int i = static_cast<int>(id % res_);
        int j = static_cast<int>(id / res_ % res_);
        int k = static_cast<int>(id / res_ / res_);
        bool full = true;
        for (int dk = -1; dk <= 1 && full; ++dk)
            for (int dj = -1; dj <= 1 && full; ++dj)
                for (int di = -1; di <= 1 && full; ++di) {
                    int ni = i + di, nj = j + dj, nk = k + dk;
                    if (ni < 0 || nj < 0 || nk < 0 || ni >= res_ || nj >= res_ || nk >= res_ ||
                        !dil(index(ni, nj, nk)))
                        full = false;
                }
        if (!full) bits_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
    }
}

VoxelGrid::ComponentCount VoxelGrid::complement_components() const {
    const std::size_t n = static_cast<std::size_t>(res_) * res_ * res_;
    std::vector<std::uint64_t> seen((n + 63) / 64, 0);
    auto vis = [&](std::size_t id) { return seen[id >> 6] >> (id & 63) & 1; };
    auto mark_vis = [&](std::size_t id) { seen[id >> 6] |= std::uint64_t{1} << (id & 63); };

    ComponentCount counts;
    std::vector<std::int64_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (test(start) || vis(start)) continue;
        bool touches_frame = false;
        mark_vis(start);
        stack.assign(1, static_cast<std::int64_t>(start));
        while (!stack.empty()) {
            std::size_t cur = static_cast<std::size_t>(stack.back());
            stack.pop_back();
            int i = static_cast<int>(cur % res_);
            int j = static_cast<int>(cur / res_ % res_);
            int k = static_cast<int>(cur / res_ / res_);
            if (i == 0 || j == 0 || k == 0 || i == res_ - 1 || j == res_ - 1 || k == res_ - 1)
                touches_frame = true;
            const int di[6] = {-1, 1, 0, 0, 0, 0};
            const int dj[6] = {0, 0, -1, 1, 0, 0};
            const int dk[6] = {0, 0, 0, 0, -1, 1};
            for (int m = 0; m < 6; ++m) {
                int ni = i + di[m], nj = j + dj[m], nk = k + dk[m];
                if (ni < 0 || nj < 0 || nk < 0 || ni >= res_ || nj >= res_ || nk >= res_) continue;
                std::size_t nid = index(ni, nj, nk);
                if (test(nid) || vis(nid)) continue;
                mark_vis(nid);
                stack.push_back(static_cast<std::int64_t>(nid));
            }
        }
        ++counts.total;
        if (touches_frame) ++counts.unbounded;
    }
    counts.bounded = counts.total - counts.unbounded;
    return counts;
}

}  // namespace pants::geom
