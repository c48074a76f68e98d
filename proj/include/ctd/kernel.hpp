#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctd/decomposer.hpp"
#include "ctd/graph.hpp"

namespace ctd {

enum class kernel_mode {
	pass_through,   // size gate: output is the input
	no_instance,    // two components of treedepth > eta: constant no-instance
	trivial_empty,  // every component already has treedepth <= eta
	reduced,        // full reduction ran
};

std::string to_string(kernel_mode m);
kernel_mode parse_kernel_mode(std::string_view s);

// Pendant clique attached to an anchor of H. interior holds the eta new
// vertices, all adjacent only to each other and to anchor.
struct gadget {
	vertex anchor;
	vertex_set interior;

	friend bool operator==(const gadget &, const gadget &) = default;
};

struct trace_entry {
	std::string rule;
	std::string detail;

	friend bool operator==(const trace_entry &, const trace_entry &) = default;
};

// Vertex ids of g1 below base_size coincide with the ids of the component
// kept by Rule 1; gadget vertices follow. g1 labels carry original ids
// (-1 for gadget vertices).
struct kernel_state {
	params p;
	kernel_mode mode = kernel_mode::pass_through;
	graph original;
	int base_size = 0;
	graph g1;
	vertex_set X, Z, R;
	std::vector<vertex_set> obstructions;
	vertex_set H, M, N;
	std::vector<gadget> gadgets;
	std::vector<vertex_set> forced_batches;   // vertices each Rule 2 application added to H
	int rule3_applications = 0;
	int rule4_applications = 0;
	graph reduced;
	std::vector<vertex> reduced_to_g1;        // only for mode == reduced
	long long k_reduced = 0;
	vertex_set sentinel;                      // original ids; empty if g has no heavy component
	std::vector<trace_entry> trace;

	vertex_set gadget_vertices() const;
	vertex_set removed() const { return M.minus(N); }
	// Map an original vertex id to its g1 id, -1 if absent.
	std::vector<vertex> original_to_g1() const;
	std::vector<vertex> reduced_to_original() const;

	friend bool operator==(const kernel_state &, const kernel_state &) = default;
};

struct rule1_result {
	std::vector<vertex_set> heavy;   // components with td > eta, by min id
	bool no_solution() const { return heavy.size() >= 2; }
};
rule1_result rule1_drop_low_td_components(const graph &g, int eta);

// (K_{eta+2} + K_{eta+2}, 1).
graph emit_no_instance(int eta);

// log2 of 2^(3 eta^2 + d eta) (lambda + eta + 1)^(eta + 1) (1 + delta) k^((3d + 6 eta) t + 1);
// -infinity when k = 0.
double size_gate_log2(const params &p);
bool size_gate_passes(long long n, const params &p);
// Exact decimal threshold, or nullopt when it has more than max_bits bits.
std::optional<std::string> size_gate_threshold(const params &p, int max_bits = 4096);

// Components of g[region] grouped by N(C) - H; groups ordered by the set T,
// components inside a group by min id.
using class_map = std::map<vertex_set, std::vector<vertex_set>>;
class_map neighbourhood_classes(const graph &g, const vertex_set &region, const vertex_set &H);

// Stages of reduce(), exposed for testing. All operate on g1 ids and expect
// mode == reduced with the partition in place.
void rule2_force_neighborhoods(kernel_state &s);
void rule3_mark_component_families(kernel_state &s);
void rule4_mark_within_component(kernel_state &s);
void build_connector_set(kernel_state &s);

// Runs the rules up to (not including) the connector harvest; used by tests
// that need the intermediate state.
kernel_state prepare(const graph &g, const params &p);
kernel_state reduce(const graph &g, const params &p);

// state.json round trip.
std::string state_to_json(const kernel_state &s);
kernel_state state_from_json(std::string_view text);
void save_state(const kernel_state &s, const std::string &dir);
kernel_state load_state(const std::string &dir);

} // namespace ctd
