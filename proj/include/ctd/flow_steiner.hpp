#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctd/graph.hpp"

namespace ctd {

// Minimum-cardinality set A of vertices other than x and y such that g - A
// has no x-y path. x and y must be distinct and non-adjacent
// (std::invalid_argument otherwise). Deterministic for a fixed graph.
vertex_set min_vertex_cut(const graph &g, vertex x, vertex y);

struct steiner_tree {
	vertex_set vertices;
	std::vector<std::pair<vertex, vertex>> edges;   // (u, v) with u < v, sorted
	vertex_set terminals;

	int cost() const { return static_cast<int>(edges.size()); }
};

// Minimum-edge Steiner tree (Dreyfus-Wagner over terminal subsets, unit
// weights). nullopt iff the terminals do not lie in one component.
std::optional<steiner_tree> compute_steiner_tree(const graph &g, const vertex_set &terminals);

// Empty string iff t is a tree of g containing its terminals whose leaves
// are all terminals.
std::string validate_steiner_tree(const graph &g, const steiner_tree &t);

// Union of V(T_L) over all L subset of candidates with 1 <= |L| <= t whose
// minimum Steiner tree exists and has at most budget vertices.
vertex_set harvest_connectors(const graph &g, const vertex_set &candidates, long long t,
                              long long budget);

namespace serial {
vertex_set harvest_connectors(const graph &g, const vertex_set &candidates, long long t,
                              long long budget);
} // namespace serial

} // namespace ctd
