#pragma once

#include <vector>

#include "ctd/flow_steiner.hpp"

namespace ctd::detail {

// BFS spanning tree of g[span] rooted at the first terminal, with
// non-terminal leaves pruned.
steiner_tree spanning_steiner_tree(const graph &g, const vertex_set &span, const vertex_set &terminals);

std::vector<char> connectors_for_size(const graph &g, const vertex_set &candidates, int size,
                                      long long budget, bool parallel);

vertex_set harvest(const graph &g, const vertex_set &candidates, long long t, long long budget,
                   bool parallel);

} // namespace ctd::detail
