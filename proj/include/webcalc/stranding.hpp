#pragma once

#include "webcalc/tensor.hpp"
#include "webcalc/web.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace webcalc {

// Binary labeling indexed like WebGraph::edges.
struct Stranding {
    std::vector<Word> labels;
    friend bool operator==(const Stranding& a, const Stranding& b) { return a.labels == b.labels; }
};

enum class Role { With, Against };

// color c present with the edge iff b_c - b_{c+1} = 1, against iff -1
std::map<int, Role> binary_to_strands(const Word& b);
Word strands_to_binary(int n, const std::map<int, Role>& strands, bool last_bit);

bool validate_stranding(const WebGraph& g, const Stranding& s);

std::vector<Stranding> enumerate_strandings(const WebGraph& g);
// Product-space filter; the reference for small webs.
std::vector<Stranding> brute_force_strandings(const WebGraph& g);

enum class Orientation { CW, CCW };

struct FlowComponent {
    int i = 0;
    int j = 0;
    std::vector<std::pair<int, bool>> traversals;  // (edge, runs with the edge)
    bool closed = false;
    Orientation orientation = Orientation::CCW;
};

std::vector<FlowComponent> flows(const WebGraph& g, const Stranding& s);
std::vector<FlowComponent> flows(const WebGraph& g, const Stranding& s, int i, int j);
Orientation orientation(const WebGraph& g, const FlowComponent& c);
int flow_exponent(const WebGraph& g, const Stranding& s);

Stranding base_stranding(const WebGraph& g);
Stranding sl3_depth_stranding(const WebGraph& g);

// Reusable per-graph data for the hot loops in enumeration and evaluation.
class StrandContext {
public:
    explicit StrandContext(const WebGraph& g);

    const WebGraph& graph() const { return *g_; }
    const Topology& topo() const { return t_; }
    const std::vector<Point>& polyline(int e) const { return lines_[static_cast<std::size_t>(e)]; }

    std::vector<FlowComponent> flows(const Stranding& s, int i, int j) const;
    int flow_exponent(const Stranding& s) const;
    Orientation orientation(const FlowComponent& c) const;
    Monomial boundary_monomial(const Stranding& s) const;

private:
    const WebGraph* g_;
    Topology t_;
    std::vector<std::vector<Point>> lines_;
};

}  // namespace webcalc
