#pragma once

#include <string>

#include "rotlabel/geom.hpp"
#include "rotlabel/labeling.hpp"

namespace rotlabel {

struct RenderOptions {
  double pixels_per_unit = 40.0;
  double margin = 0.25;  // map units around the outer circles
  bool draw_outer_circles = false;
};

/// Snapshot of the map rotated by `alpha` radians. Labels active at `alpha`
/// are filled, all others drawn dashed. Without an assignment every label is
/// drawn filled. Throws std::invalid_argument for a non-finite angle.
std::string render_svg(const Instance& inst, const ActiveRangeAssignment* phi, double alpha,
                       const RenderOptions& options = {});

}  // namespace rotlabel
