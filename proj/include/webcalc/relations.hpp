#pragma once

#include "webcalc/laurent.hpp"
#include "webcalc/tensor.hpp"
#include "webcalc/web.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace webcalc {

struct RelationTerm {
    LaurentPoly coeff;
    WebGraph web;
};

// Terms zeroed by an out-of-range weight are dropped, so a side may be empty.
struct RelationInstance {
    std::string name;
    std::vector<std::pair<std::string, int>> params;
    int n = 2;
    std::vector<RelationTerm> lhs;
    std::vector<RelationTerm> rhs;

    std::string label() const;
};

// Erases weight 0 and n edges, smooths the freed vertices and drops unused
// boundary vertices. Empty when some weight lies outside [0, n].
std::optional<WebGraph> apply_zero_rule(WebGraph g);

RelationInstance make_bigon(int n, int k, int l);
RelationInstance make_IH(int n, int k, int l, int m);
RelationInstance make_square_removal(int n, int k, int l, int r, int s);
RelationInstance make_square_switch_unit(int n, int k, int l);
RelationInstance make_square_switch_general(int n, int k, int l, int r, int s);
RelationInstance make_loop(int n, int k);
RelationInstance make_circle(int n, int k);

// Sum of coeff * f(G) over lhs minus the same over rhs.
// Throws std::invalid_argument if member webs disagree on the boundary.
WebVector residual(const RelationInstance& inst);
bool verify(const RelationInstance& inst);
bool verify_edge_flip(const WebGraph& g, const std::vector<std::string>& edges);
// Every member web against every subset of its edges (webs up to 10 edges).
bool verify_flip_orbit(const RelationInstance& inst);

// Reflection across a vertical line; reverses the boundary order.
RelationInstance mirrored(const RelationInstance& inst);
// Same relation with geometry nudged by up to amp.
RelationInstance jittered(const RelationInstance& inst, std::uint64_t seed, double amp = 0.05);

const std::vector<std::string>& relation_rules();
// All admissible instances of a rule for 2 <= n <= max_n, with r + s <= 3.
std::vector<RelationInstance> relation_grid(const std::string& rule, int max_n);

struct RelationResult {
    std::string label;
    bool ok = false;
    WebVector residual;
};

std::vector<RelationResult> verify_all(const std::vector<RelationInstance>& insts, int jobs = 1);

}  // namespace webcalc
