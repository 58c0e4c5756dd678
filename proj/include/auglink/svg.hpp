#pragma once

#include "auglink/bounds.hpp"

namespace auglink {

struct SvgOverlays {
  bool twist_regions = false;
  bool crossing_circles = false;
  // Only specific regions when non-empty; ids must exist.
  std::vector<int> region_ids;
  std::vector<ProjectionDescriptor> projected_curves;
};

// Deterministic diagram picture: Tutte-style barycentric layout with the
// largest face outside, strands drawn with under-crossing gaps, overlays as
// separate labeled elements.
std::string render_svg(const Diagram& d, const SvgOverlays& overlays = {});

}  // namespace auglink
