#pragma once

#include <string>

#include "lamcoord/lamination.hpp"

namespace lamcoord {

struct RenderOptions {
  double stroke_width = 1.5;
  double scale = 12.0; // pixels per layout unit (one slot pitch)
  bool labels = true;  // intersection counts next to each arc
};

// SVG 1.1 drawing of the diagram: punctures left to right, then crosscaps,
// inside one boundary. The arcs are paths with ids "alpha-i", "beta-i",
// "gamma-i" (1-based); each traced component is one path of class
// "component". A strand through a crosscap leaves the circle at a point and
// re-enters at the antipodal point, which starts a new subpath.
// Output is a pure function of the diagram and options.
std::string render_svg(const StrandDiagram& diagram, const RenderOptions& options = {});

} // namespace lamcoord
