#pragma once

#include <string>

#include "toral/arrangement.hpp"

namespace toral {

struct RenderOptions {
    bool universal_cover = false;
    int size = 640;    // pixel width of the unit square
    int margin = 50;
};

// Flat-torus figure: the unit square with identification marks, curves
// colored by tag, vertices labeled. Output is deterministic byte-for-byte
// for identical input (coordinates from exact fixed-point conversion).
std::string render_svg(const TorusGraph& tg, const RenderOptions& options = RenderOptions());

}  // namespace toral
