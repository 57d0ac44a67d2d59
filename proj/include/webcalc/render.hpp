#pragma once

#include "webcalc/stranding.hpp"
#include "webcalc/web.hpp"

#include <optional>
#include <string>
#include <utility>

namespace webcalc {

struct SvgOptions {
    const Stranding* stranding = nullptr;
    std::optional<std::pair<int, int>> flow;  // needs a stranding
    double scale = 60.0;
};

// Strand color c uses palette entry (c - 1) mod 8.
const char* strand_color(int c);

// Deterministic SVG 1.1 drawing with the boundary axis across the top.
std::string render_svg(const WebGraph& g, const SvgOptions& opt = {});

}  // namespace webcalc
