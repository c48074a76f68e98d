#pragma once

#include <optional>
#include <vector>

#include "ctd/flow_steiner.hpp"
#include "ctd/graph.hpp"

namespace ctd {

// Largest graph the subset enumerations accept; larger inputs throw
// std::length_error.
inline constexpr int oracle_max_vertices = 24;
inline constexpr int steiner_oracle_max_vertices = 16;

struct oracle_report {
	long long opt_value = 0;               // min(OPT, k + 1)
	std::optional<vertex_set> witness;     // first optimum in (size, lex) order
	long long optimal_count = 0;
	std::vector<vertex_set> feasible;      // every solution of size <= k when requested
};

// Exact optimum of connected eta-treedepth deletion by enumeration in
// increasing size.
oracle_report opt_ctds(const graph &g, long long k, int eta, bool enumerate = false);
// Same search; connectivity of the deleted set is only required when asked.
oracle_report opt_tds(const graph &g, long long k, int eta, bool connected, bool enumerate = false);

// All eta-treedepth deletion sets of size <= k (connected ones only when
// requested), ordered by size and then lexicographically.
std::vector<vertex_set> enumerate_tds(const graph &g, long long k, int eta, bool connected);

namespace serial {
std::vector<vertex_set> enumerate_tds(const graph &g, long long k, int eta, bool connected);
} // namespace serial

// Minimum Steiner tree by enumerating vertex supersets of the terminals.
// nullopt if the terminals are not in one component.
std::optional<steiner_tree> brute_steiner(const graph &g, const vertex_set &terminals);

} // namespace ctd
