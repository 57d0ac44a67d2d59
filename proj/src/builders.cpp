#include "webcalc/builders.hpp"

#include <stdexcept>

namespace webcalc {

WebGraph make_cup_web(int n, int k) {
    WebGraph g;
    g.n = n;
    g.boundary = {{"b1", 1.0}, {"b2", 2.0}};
    g.edges = {{"e1", "b1", "b2", k, {{1.0, -1.0}, {2.0, -1.0}}}};
    return g;
}

WebGraph make_loop_web(int n, int k) {
    WebGraph g;
    g.n = n;
    g.edges = {{"e1", "", "", k, {{0.0, -2.0}, {1.0, -2.0}, {1.0, -1.0}, {0.0, -1.0}}}};
    return g;
}

WebGraph make_tripod_web(int n, std::array<int, 3> w, bool into) {
    WebGraph g;
    g.n = n;
    g.boundary = {{"b1", 1.0}, {"b2", 2.0}, {"b3", 3.0}};
    g.interior = {{"v", 2.0, -1.0}};
    const std::vector<std::vector<Point>> vias = {{{1.0, -1.0}}, {}, {{3.0, -1.0}}};
    for (int i = 0; i < 3; ++i) {
        std::string b = "b" + std::to_string(i + 1);
        std::string id = "e" + std::to_string(i + 1);
        std::vector<Point> via = vias[i];
        if (into)
            g.edges.push_back({id, b, "v", w[i], via});
        else
            g.edges.push_back({id, "v", b, w[i], {via.rbegin(), via.rend()}});
    }
    return g;
}

WebGraph make_running_sl4() {
    WebGraph g;
    g.n = 4;
    g.boundary = {{"b1", 1.0}, {"b2", 2.0}, {"b3", 5.0}, {"b4", 6.0}};
    g.interior = {{"A", 3.0, -1.0}, {"B", 3.0, -2.0}, {"C", 4.0, -1.0}, {"D", 4.0, -2.0}};
    g.edges = {
        {"e1", "B", "b1", 1, {{1.0, -2.0}}},
        {"e2", "b2", "A", 3, {{2.0, -1.0}}},
        {"e3", "A", "B", 2, {}},
        {"e4", "A", "C", 1, {}},
        {"e5", "D", "B", 3, {}},
        {"e6", "D", "C", 2, {}},
        {"e7", "C", "b3", 3, {{5.0, -1.0}}},
        {"e8", "b4", "D", 1, {{6.0, -2.0}}},
    };
    return g;
}

WebGraph make_two_cups_sl3() {
    WebGraph g;
    g.n = 3;
    g.boundary = {{"b1", 1.0}, {"b2", 2.0}, {"b3", 3.0}, {"b4", 4.0}};
    g.edges = {
        {"e1", "b2", "b1", 1, {{2.0, -1.0}, {1.0, -1.0}}},
        {"e2", "b3", "b4", 1, {{3.0, -1.0}, {4.0, -1.0}}},
    };
    return g;
}

}  // namespace webcalc
