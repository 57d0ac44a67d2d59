#pragma once

#include "webcalc/web.hpp"

#include <array>

namespace webcalc {

// b1 -> b2 with weight k; boundary vector (n-k, k).
WebGraph make_cup_web(int n, int k);
// Counterclockwise closed loop of weight k.
WebGraph make_loop_web(int n, int k);
// One vertex, three legs to the boundary, all directed out of the vertex
// (or all into it when `into` is set).
WebGraph make_tripod_web(int n, std::array<int, 3> w, bool into = false);
// The four-vertex sl4 web with boundary vector (1,1,3,3).
WebGraph make_running_sl4();
// The sl3 web with boundary vector (1,2,2,1) used for the base-stranding example.
WebGraph make_two_cups_sl3();

}  // namespace webcalc
