#pragma once
#include <array>

#include "crossball/assemble.hpp"

namespace crossball {

// The traced circles cut the sphere into regions. Regions and circles form a
// tree: one vertex per region, one edge per circle, the edge joining the two
// regions the circle borders. The height of a circle toward a region is the
// longest simple path in the tree from that region after removing the
// circle's own edge.
struct HeightTree {
  Side side = Side::Plus;
  int region_count = 0;
  std::vector<std::array<int, 2>> circle_regions;  // per circle
  std::vector<std::array<int, 2>> heights;         // toward each region above
  std::vector<std::vector<int>> region_circles;    // per region, sorted

  int circle_count() const { return static_cast<int>(circle_regions.size()); }
  int height(int circle) const {
    return std::min(heights[circle][0], heights[circle][1]);
  }
  bool innermost(int circle) const { return height(circle) == 0; }
};

HeightTree build_height_tree(const SurfacePosition& p, Side side);
HeightTree build_height_tree(const SurfacePosition& p, const SideTrace& tr);

// All circles innermost, or some circle at height exactly 1. Holds on every
// tree; kept as a checked property.
bool check_height1(const HeightTree& t);

std::string height_tree_dot(const HeightTree& t);

}  // namespace crossball
