#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctd {

using vertex = int;

// Sorted, duplicate-free list of vertex ids.
class vertex_set {
public:
	using const_iterator = std::vector<vertex>::const_iterator;

	vertex_set() = default;
	vertex_set(std::initializer_list<vertex> ids);
	explicit vertex_set(std::vector<vertex> ids);

	bool contains(vertex v) const;
	void insert(vertex v);
	void erase(vertex v);

	std::size_t size() const { return ids_.size(); }
	bool empty() const { return ids_.empty(); }
	vertex operator[](std::size_t i) const { return ids_[i]; }
	vertex front() const { return ids_.front(); }
	vertex back() const { return ids_.back(); }
	const_iterator begin() const { return ids_.begin(); }
	const_iterator end() const { return ids_.end(); }
	const std::vector<vertex> &ids() const { return ids_; }

	vertex_set unite(const vertex_set &other) const;
	vertex_set intersect(const vertex_set &other) const;
	vertex_set minus(const vertex_set &other) const;
	bool is_subset_of(const vertex_set &other) const;
	bool intersects(const vertex_set &other) const;

	friend bool operator==(const vertex_set &, const vertex_set &) = default;
	friend auto operator<=>(const vertex_set &a, const vertex_set &b) {
		return a.ids_ <=> b.ids_;
	}

private:
	std::vector<vertex> ids_;
};

// Immutable simple undirected graph on dense ids 0..n-1 with sorted
// adjacency. Every vertex carries a provenance label; label -1 marks a
// vertex that has no counterpart in the input graph.
class graph {
public:
	graph() = default;
	graph(int n, std::span<const std::pair<vertex, vertex>> edges,
	      std::vector<std::int64_t> labels = {});

	int num_vertices() const { return static_cast<int>(adj_.size()); }
	std::int64_t num_edges() const { return num_edges_; }
	std::span<const vertex> neighbors(vertex v) const { return adj_[v]; }
	int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }
	bool has_edge(vertex u, vertex v) const;
	std::int64_t label(vertex v) const { return labels_[v]; }
	const std::vector<std::int64_t> &labels() const { return labels_; }
	bool valid(vertex v) const { return v >= 0 && v < num_vertices(); }

	// Edges as (u, v) with u < v, lexicographically ordered.
	std::vector<std::pair<vertex, vertex>> edges() const;

	friend bool operator==(const graph &, const graph &) = default;

private:
	std::vector<std::vector<vertex>> adj_;
	std::vector<std::int64_t> labels_;
	std::int64_t num_edges_ = 0;
};

class graph_builder {
public:
	graph_builder() = default;
	explicit graph_builder(int n);

	vertex add_vertex(std::int64_t label);
	vertex add_vertex();
	// Throws on self-loops and duplicate edges.
	void add_edge(vertex u, vertex v);
	// Returns false (and does nothing) if the edge is already present.
	bool add_edge_if_absent(vertex u, vertex v);
	bool has_edge(vertex u, vertex v) const;
	int num_vertices() const { return static_cast<int>(labels_.size()); }

	graph build() const;

private:
	std::vector<std::int64_t> labels_;
	std::vector<std::pair<vertex, vertex>> edges_;
	std::vector<std::vector<vertex>> adj_;
};

struct subgraph {
	graph g;
	std::vector<vertex> to_parent;   // subgraph id -> parent id

	vertex_set lift(const vertex_set &s) const;
	// Parent ids not present in the subgraph are dropped.
	vertex_set restrict(const vertex_set &parent_ids, int parent_n) const;
	std::vector<vertex> from_parent(int parent_n) const;
};

void check_ids(const graph &g, const vertex_set &s);

std::vector<vertex_set> connected_components(const graph &g);
// Components of g[within], in g's ids, ordered by minimum id.
std::vector<vertex_set> connected_components(const graph &g, const vertex_set &within);
bool is_connected(const graph &g);
bool is_connected(const graph &g, const vertex_set &s);

subgraph induced_subgraph(const graph &g, const vertex_set &s);
subgraph remove_vertices(const graph &g, const vertex_set &s);
vertex_set neighborhood(const graph &g, const vertex_set &s);
vertex_set all_vertices(const graph &g);

// -1 marks unreachable vertices.
std::vector<int> bfs_distances(const graph &g, vertex source);
// Shortest path from source to target using only vertices in allowed
// (source and target must be in allowed). Empty if none.
std::vector<vertex> shortest_path(const graph &g, vertex source, vertex target,
                                  const vertex_set &allowed);
int diameter(const graph &g);

class graph_format_error : public std::runtime_error {
public:
	graph_format_error(int line, const std::string &what);
	int line() const { return line_; }

private:
	int line_;
};

graph read_graph(std::string_view text);
graph read_graph_file(const std::string &path);
std::string write_graph(const graph &g);
void write_graph_file(const graph &g, const std::string &path);

vertex_set read_vertex_set(std::string_view text);
std::string write_vertex_set(const vertex_set &s);

} // namespace ctd
