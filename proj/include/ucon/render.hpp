#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucon/gadgets.hpp"
#include "ucon/instance.hpp"

namespace ucon {

struct RenderOptions {
  const Selection* selection = nullptr;
  std::optional<double> alpha;                 // draw translucent disks of this radius at the selection
  const std::vector<RegionTag>* tags = nullptr;  // per-mark colors
  double width_px = 800.0;
};

/// Deterministic SVG. The viewport is the instance bounding box plus a 5% margin.
/// Throws std::invalid_argument when the selection or tags do not match the instance.
std::string render_svg(const Instance& inst, const RenderOptions& opts = {});

}  // namespace ucon
