#pragma once

#include <string>
#include <vector>

#include "ctd/kernel.hpp"

namespace ctd {

enum class solution_kind { feasible, sentinel };
std::string to_string(solution_kind k);

struct solution {
	vertex_set vertices;
	solution_kind kind = solution_kind::sentinel;
	long long value = 0;   // min(|vertices|, k + 1); k + 1 for the sentinel

	friend bool operator==(const solution &, const solution &) = default;
};

// g[s] connected and td(g - s) <= eta. The empty set is accepted iff
// td(g) <= eta.
bool verify_ctds(const graph &g, const vertex_set &s, int eta);

// Classes are the components of g[region] grouped by N(C) - H.
struct class_context {
	vertex_set H;
	vertex_set region;
};

// Class keys T whose components hold more than lambda vertices of s.
std::vector<vertex_set> heavy_classes(const graph &g, const vertex_set &s, long long lambda,
                                      const class_context &ctx);
bool is_nice(const graph &g, const vertex_set &s, long long lambda, const class_context &ctx);

struct nice_result {
	vertex_set vertices;
	int classes_fixed = 0;   // r
	long long added = 0;
};

// Extends s, a connected eta-treedepth deletion set of g - Y containing H,
// to a nice one: for every heavy class T not inside s it adds T and a shortest path from
// each vertex of T - s to the smallest vertex of s in the first component of
// the class that meets s. Classes are fixed before any vertex is added.
// Throws std::invalid_argument when the preconditions fail.
nice_result make_nice(const graph &g, const vertex_set &Y, const vertex_set &s, const params &p,
                      const class_context &ctx);

// Class context of the gadget graph g1: H and the R vertices.
class_context kernel_classes(const kernel_state &st);

// Drops gadget interiors (g1 ids in, g1 ids out).
vertex_set strip_gadgets(const kernel_state &st, const vertex_set &s1);

solution sentinel_solution(const kernel_state &st);

// Maps a solution of the reduced instance (reduced ids) back to the original
// graph. Never throws on bad input; anything unusable yields the sentinel.
solution lift(const kernel_state &st, const vertex_set &reduced_solution,
              std::vector<trace_entry> *steps = nullptr);

} // namespace ctd
