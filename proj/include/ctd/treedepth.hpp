#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctd/graph.hpp"

namespace ctd {

// Rooted forest on the vertices of its host graph. parent is -1 for roots;
// roots have depth 1.
struct td_decomposition {
	std::vector<vertex> parent;
	std::vector<int> depth;

	int size() const { return static_cast<int>(parent.size()); }
	int max_depth() const;
	// True iff a is a strict ancestor of b.
	bool is_ancestor(vertex a, vertex b) const;

	friend bool operator==(const td_decomposition &, const td_decomposition &) = default;
};

// Exact treedepth queries over induced subgraphs of one fixed host graph.
// Answers for connected vertex subsets are memoised for the lifetime of the
// solver, so repeated queries on the same host (e.g. one per candidate
// deletion set) share work. Not thread-safe; use one solver per thread.
class td_solver {
public:
	explicit td_solver(const graph &g);
	~td_solver();
	td_solver(td_solver &&) noexcept;
	td_solver &operator=(td_solver &&) noexcept;

	const graph &host() const;

	// td(g[s]) <= bound. The empty graph has treedepth 0.
	bool at_most(const vertex_set &s, int bound);
	bool at_most(int bound);
	// td(g - removed) <= bound, with removed given as a raw id list.
	bool at_most_without(std::span<const vertex> removed, int bound);

	int treedepth(const vertex_set &s);
	int treedepth();

	// Minimum-depth decomposition of g[s] built root-first, choosing the
	// smallest feasible root id at every step; nullopt iff td(g[s]) > bound.
	// The result is indexed by host ids; vertices outside s get parent -1
	// and depth 0.
	std::optional<td_decomposition> decompose(const vertex_set &s, int bound);

	std::size_t memo_size() const;

private:
	struct impl;
	std::unique_ptr<impl> impl_;
};

int treedepth(const graph &g);
bool td_at_most(const graph &g, int eta);
std::optional<td_decomposition> build_decomposition(const graph &g, int eta);

// Empty string if d is a valid decomposition of g (forest on V(g), depth
// consistent with parents, every edge joins an ancestor/descendant pair).
std::string validate_decomposition(const graph &g, const td_decomposition &d);

// s together with all strict ancestors of its members.
vertex_set upward_closure(const td_decomposition &d, const vertex_set &s);

// For connected g with td(g) <= eta: diameter(g) <= 2^eta. Throws
// std::invalid_argument if the precondition does not hold.
bool check_diameter_bound(const graph &g, int eta);

// One line per vertex: "v <id> <parent-id|-1> <depth>".
std::string write_decomposition(const td_decomposition &d);
td_decomposition read_decomposition(std::string_view text);

} // namespace ctd
