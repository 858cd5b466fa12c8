#pragma once

#include <string>

#include "cheese/cheese.hpp"

namespace cheese {

struct RenderOptions {
  int width_px = 800;        // >= 64
  double margin_frac = 0.05;
  std::string fill_color = "#1d1d1d";
  std::string hole_color = "#ffffff";
  bool show_boundary_chain = false;
};

/// Static SVG: the outer disc as a filled circle, each removed disc as an
/// overlaid hole-colored circle (so circle count is 1 + disc count). All
/// coordinates are quantized to 6 decimal places; identical input yields
/// byte-identical output.
std::string render_svg(const SwissCheese& c, const RenderOptions& opts = {});

/// Two panels side by side on one shared scale.
std::string render_comparison(const SwissCheese& before, const SwissCheese& after,
                              const RenderOptions& opts = {});

}  // namespace cheese
