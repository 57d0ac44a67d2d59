#pragma once

#include "webcalc/geometry.hpp"

#include <string>
#include <vector>

namespace webcalc {

struct BoundaryVertex {
    std::string id;
    double x = 0;
};

struct InteriorVertex {
    std::string id;
    double x = 0;
    double y = 0;
};

// A closed loop has empty tail and head; its via list is the closed curve.
struct Edge {
    std::string id;
    std::string tail;
    std::string head;
    int weight = 1;
    std::vector<Point> via;

    bool is_loop() const { return tail.empty() && head.empty(); }
};

struct WebGraph {
    int n = 2;
    std::vector<BoundaryVertex> boundary;
    std::vector<InteriorVertex> interior;
    std::vector<Edge> edges;
};

// Integer view of a web: boundary vertices are 0..nb-1, interior nb..nb+ni-1.
struct Incidence {
    int edge;
    bool into;  // the edge's head is this vertex
};

struct Topology {
    int nb = 0;
    int ni = 0;
    std::vector<int> tail;  // -1 for loops
    std::vector<int> head;
    std::vector<Point> pos;
    std::vector<std::vector<Incidence>> inc;
    std::vector<int> boundary_edge;  // -1 if the boundary vertex is unused

    int vertex_count() const { return nb + ni; }
    bool is_boundary(int v) const { return v >= 0 && v < nb; }
};

// Throws std::invalid_argument on duplicate or unknown ids.
Topology topology(const WebGraph& g);
// Full curve of an edge from tail to head; loops repeat the first point at the end.
std::vector<Point> edge_polyline(const WebGraph& g, const Topology& t, int e);
int edge_index(const WebGraph& g, const std::string& id);
int vertex_index(const WebGraph& g, const std::string& id);

struct Issue {
    std::string what;
    std::string where;
};

struct ValidationReport {
    std::vector<Issue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

ValidationReport validate(const WebGraph& g);
// Throws std::invalid_argument carrying the report text.
void require_valid(const WebGraph& g);

std::vector<int> boundary_weight_vector(const WebGraph& g);
WebGraph flip_edges(const WebGraph& g, const std::vector<std::string>& ids);

enum class VertexType { TypeI, TypeII };
VertexType vertex_type(const WebGraph& g, const std::string& v);

struct HalfEdge {
    int edge;  // >= edge count for the axis segment edge - edge count
    bool forward;
};

struct FaceSet {
    int outer = 0;
    // each face's boundary: its own cycle (if bounded) followed by nested outer cycles
    std::vector<std::vector<std::vector<HalfEdge>>> walks;
    std::vector<int> left;   // per web edge, face on the left of its direction
    std::vector<int> right;
    int vertex_count = 0;     // including loop anchors
    int edge_count = 0;       // including axis segments
    int component_count = 0;

    int face_count() const { return static_cast<int>(walks.size()); }
};

FaceSet faces(const WebGraph& g);
// Residues in [0, n) per face; U maps to 0.
std::vector<int> dual_distance(const WebGraph& g, const FaceSet& f);
std::vector<int> dual_distance(const WebGraph& g);

// Unweighted dual-graph distance from U.
std::vector<int> face_depth(const WebGraph& g, const FaceSet& f);

}  // namespace webcalc
