#include "ctd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace ctd {

vertex_set::vertex_set(std::initializer_list<vertex> ids) : vertex_set(std::vector<vertex>(ids)) {}

vertex_set::vertex_set(std::vector<vertex> ids) : ids_(std::move(ids)) {
	std::sort(ids_.begin(), ids_.end());
	ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool vertex_set::contains(vertex v) const {
	return std::binary_search(ids_.begin(), ids_.end(), v);
}

void vertex_set::insert(vertex v) {
	auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
	if(it == ids_.end() || *it != v)
		ids_.insert(it, v);
}

void vertex_set::erase(vertex v) {
	auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
	if(it != ids_.end() && *it == v)
		ids_.erase(it);
}

vertex_set vertex_set::unite(const vertex_set &other) const {
	vertex_set out;
	std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.ids_));
	return out;
}

vertex_set vertex_set::intersect(const vertex_set &other) const {
	vertex_set out;
	std::set_intersection(begin(), end(), other.begin(), other.end(),
	                      std::back_inserter(out.ids_));
	return out;
}

vertex_set vertex_set::minus(const vertex_set &other) const {
	vertex_set out;
	std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.ids_));
	return out;
}

bool vertex_set::is_subset_of(const vertex_set &other) const {
	return std::includes(other.begin(), other.end(), begin(), end());
}

bool vertex_set::intersects(const vertex_set &other) const {
	auto a = begin();
	auto b = other.begin();
	while(a != end() && b != other.end()) {
		if(*a == *b)
			return true;
		if(*a < *b)
			++a;
		else
			++b;
	}
	return false;
}

graph::graph(int n, std::span<const std::pair<vertex, vertex>> edges,
             std::vector<std::int64_t> labels)
		: adj_(n), labels_(std::move(labels)) {
	if(labels_.empty()) {
		labels_.resize(n);
		for(int v = 0; v < n; ++v)
			labels_[v] = v;
	}
	if(static_cast<int>(labels_.size()) != n)
		throw std::invalid_argument("graph: label count does not match vertex count");
	for(auto [u, v] : edges) {
		if(u < 0 || v < 0 || u >= n || v >= n)
			throw std::invalid_argument("graph: edge endpoint out of range");
		if(u == v)
			throw std::invalid_argument("graph: self-loop on vertex " + std::to_string(u));
		adj_[u].push_back(v);
		adj_[v].push_back(u);
	}
	for(auto &list : adj_) {
		std::sort(list.begin(), list.end());
		if(std::adjacent_find(list.begin(), list.end()) != list.end())
			throw std::invalid_argument("graph: duplicate edge");
	}
	num_edges_ = static_cast<std::int64_t>(edges.size());
}

bool graph::has_edge(vertex u, vertex v) const {
	const auto &list = adj_[u];
	return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<vertex, vertex>> graph::edges() const {
	std::vector<std::pair<vertex, vertex>> out;
	out.reserve(num_edges_);
	for(vertex u = 0; u < num_vertices(); ++u)
		for(vertex v : adj_[u])
			if(u < v)
				out.emplace_back(u, v);
	return out;
}

graph_builder::graph_builder(int n) {
	for(int v = 0; v < n; ++v)
		add_vertex();
}

vertex graph_builder::add_vertex(std::int64_t label) {
	labels_.push_back(label);
	adj_.emplace_back();
	return num_vertices() - 1;
}

vertex graph_builder::add_vertex() {
	return add_vertex(num_vertices());
}

bool graph_builder::has_edge(vertex u, vertex v) const {
	const auto &list = adj_[u];
	return std::find(list.begin(), list.end(), v) != list.end();
}

void graph_builder::add_edge(vertex u, vertex v) {
	if(!add_edge_if_absent(u, v))
		throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
}

bool graph_builder::add_edge_if_absent(vertex u, vertex v) {
	if(u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
		throw std::invalid_argument("edge endpoint out of range");
	if(u == v)
		throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
	if(has_edge(u, v))
		return false;
	adj_[u].push_back(v);
	adj_[v].push_back(u);
	edges_.emplace_back(u, v);
	return true;
}

graph graph_builder::build() const {
	return graph(num_vertices(), edges_, labels_);
}

vertex_set subgraph::lift(const vertex_set &s) const {
	std::vector<vertex> out;
	out.reserve(s.size());
	for(vertex v : s)
		out.push_back(to_parent.at(v));
	return vertex_set(std::move(out));
}

std::vector<vertex> subgraph::from_parent(int parent_n) const {
	std::vector<vertex> map(parent_n, -1);
	for(vertex v = 0; v < static_cast<vertex>(to_parent.size()); ++v)
		map[to_parent[v]] = v;
	return map;
}

vertex_set subgraph::restrict(const vertex_set &parent_ids, int parent_n) const {
	auto map = from_parent(parent_n);
	std::vector<vertex> out;
	for(vertex v : parent_ids)
		if(v >= 0 && v < parent_n && map[v] >= 0)
			out.push_back(map[v]);
	return vertex_set(std::move(out));
}

void check_ids(const graph &g, const vertex_set &s) {
	if(!s.empty() && (s.front() < 0 || s.back() >= g.num_vertices()))
		throw std::out_of_range("vertex id out of range");
}

std::vector<vertex_set> connected_components(const graph &g) {
	return connected_components(g, all_vertices(g));
}

std::vector<vertex_set> connected_components(const graph &g, const vertex_set &within) {
	check_ids(g, within);
	const int n = g.num_vertices();
	std::vector<char> alive(n, 0), seen(n, 0);
	for(vertex v : within)
		alive[v] = 1;
	std::vector<vertex_set> out;
	std::vector<vertex> stack;
	for(vertex s : within) {
		if(seen[s])
			continue;
		std::vector<vertex> comp;
		seen[s] = 1;
		stack.push_back(s);
		while(!stack.empty()) {
			vertex u = stack.back();
			stack.pop_back();
			comp.push_back(u);
			for(vertex w : g.neighbors(u)) {
				if(alive[w] && !seen[w]) {
					seen[w] = 1;
					stack.push_back(w);
				}
			}
		}
		out.emplace_back(std::move(comp));
	}
	return out;
}

bool is_connected(const graph &g) {
	return connected_components(g).size() <= 1;
}

bool is_connected(const graph &g, const vertex_set &s) {
	return connected_components(g, s).size() <= 1;
}

subgraph induced_subgraph(const graph &g, const vertex_set &s) {
	check_ids(g, s);
	std::vector<vertex> map(g.num_vertices(), -1);
	subgraph out;
	out.to_parent = s.ids();
	std::vector<std::int64_t> labels;
	labels.reserve(s.size());
	for(std::size_t i = 0; i < s.size(); ++i) {
		map[s[i]] = static_cast<vertex>(i);
		labels.push_back(g.label(s[i]));
	}
	std::vector<std::pair<vertex, vertex>> edges;
	for(vertex u : s)
		for(vertex w : g.neighbors(u))
			if(u < w && map[w] >= 0)
				edges.emplace_back(map[u], map[w]);
	out.g = graph(static_cast<int>(s.size()), edges, std::move(labels));
	return out;
}

subgraph remove_vertices(const graph &g, const vertex_set &s) {
	return induced_subgraph(g, all_vertices(g).minus(s));
}

vertex_set neighborhood(const graph &g, const vertex_set &s) {
	check_ids(g, s);
	std::vector<vertex> out;
	for(vertex u : s)
		for(vertex w : g.neighbors(u))
			if(!s.contains(w))
				out.push_back(w);
	return vertex_set(std::move(out));
}

vertex_set all_vertices(const graph &g) {
	std::vector<vertex> ids(g.num_vertices());
	for(vertex v = 0; v < g.num_vertices(); ++v)
		ids[v] = v;
	return vertex_set(std::move(ids));
}

std::vector<int> bfs_distances(const graph &g, vertex source) {
	if(!g.valid(source))
		throw std::out_of_range("bfs source out of range");
	std::vector<int> dist(g.num_vertices(), -1);
	std::queue<vertex> q;
	dist[source] = 0;
	q.push(source);
	while(!q.empty()) {
		vertex u = q.front();
		q.pop();
		for(vertex w : g.neighbors(u)) {
			if(dist[w] < 0) {
				dist[w] = dist[u] + 1;
				q.push(w);
			}
		}
	}
	return dist;
}

std::vector<vertex> shortest_path(const graph &g, vertex source, vertex target,
                                  const vertex_set &allowed) {
	std::vector<vertex> pred(g.num_vertices(), -2);
	std::queue<vertex> q;
	pred[source] = -1;
	q.push(source);
	while(!q.empty() && pred[target] == -2) {
		vertex u = q.front();
		q.pop();
		for(vertex w : g.neighbors(u)) {
			if(pred[w] == -2 && allowed.contains(w)) {
				pred[w] = u;
				q.push(w);
			}
		}
	}
	if(pred[target] == -2)
		return {};
	std::vector<vertex> path;
	for(vertex v = target; v != -1; v = pred[v])
		path.push_back(v);
	std::reverse(path.begin(), path.end());
	return path;
}

int diameter(const graph &g) {
	int best = 0;
	for(vertex v = 0; v < g.num_vertices(); ++v) {
		auto dist = bfs_distances(g, v);
		for(int d : dist) {
			if(d < 0)
				throw std::invalid_argument("diameter: graph is disconnected");
			best = std::max(best, d);
		}
	}
	return best;
}

graph_format_error::graph_format_error(int line, const std::string &what)
		: std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while(i < line.size()) {
		while(i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
			++i;
		std::size_t j = i;
		while(j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
			++j;
		if(j > i)
			out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

bool parse_int(std::string_view tok, long long &out) {
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
	return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

graph read_graph(std::string_view text) {
	int line_no = 0;
	long long n = -1, m = -1;
	std::vector<std::pair<vertex, vertex>> edges;
	std::vector<std::vector<vertex>> seen;
	std::size_t pos = 0;
	while(pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if(end == std::string_view::npos)
			end = text.size();
		std::string_view line = text.substr(pos, end - pos);
		pos = end + 1;
		++line_no;
		auto toks = split_tokens(line);
		if(toks.empty() || toks[0].front() == '#')
			continue;
		if(toks[0] == "p") {
			if(n >= 0)
				throw graph_format_error(line_no, "duplicate header");
			if(toks.size() != 3 || !parse_int(toks[1], n) || !parse_int(toks[2], m) || n < 0 || m < 0)
				throw graph_format_error(line_no, "expected 'p <n> <m>'");
			if(n > (1 << 28))
				throw graph_format_error(line_no, "vertex count too large");
			seen.assign(n, {});
		} else if(toks[0] == "e") {
			if(n < 0)
				throw graph_format_error(line_no, "edge before header");
			long long u, v;
			if(toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
				throw graph_format_error(line_no, "expected 'e <u> <v>'");
			if(u < 0 || v < 0 || u >= n || v >= n)
				throw graph_format_error(line_no, "vertex id out of range");
			if(u == v)
				throw graph_format_error(line_no, "self-loop on vertex " + std::to_string(u));
			auto &list = seen[u];
			if(std::find(list.begin(), list.end(), static_cast<vertex>(v)) != list.end())
				throw graph_format_error(line_no, "duplicate edge");
			seen[u].push_back(static_cast<vertex>(v));
			seen[v].push_back(static_cast<vertex>(u));
			edges.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
		} else {
			throw graph_format_error(line_no, "unknown line type '" + std::string(toks[0]) + "'");
		}
	}
	if(n < 0)
		throw graph_format_error(line_no, "missing header");
	if(static_cast<long long>(edges.size()) != m)
		throw graph_format_error(line_no, "header declares " + std::to_string(m) + " edges, found " +
		                                      std::to_string(edges.size()));
	return graph(static_cast<int>(n), edges);
}

graph read_graph_file(const std::string &path) {
	std::ifstream in(path);
	if(!in)
		throw std::runtime_error("cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return read_graph(ss.str());
}

std::string write_graph(const graph &g) {
	std::string out = "p " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
	for(auto [u, v] : g.edges())
		out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
	return out;
}

void write_graph_file(const graph &g, const std::string &path) {
	std::ofstream out(path);
	if(!out)
		throw std::runtime_error("cannot write " + path);
	out << write_graph(g);
}

vertex_set read_vertex_set(std::string_view text) {
	std::vector<vertex> ids;
	int line_no = 0;
	std::size_t pos = 0;
	while(pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if(end == std::string_view::npos)
			end = text.size();
		std::string_view line = text.substr(pos, end - pos);
		pos = end + 1;
		++line_no;
		auto toks = split_tokens(line);
		if(toks.empty() || toks[0].front() == '#')
			continue;
		for(auto tok : toks) {
			long long v;
			if(!parse_int(tok, v) || v < 0)
				throw graph_format_error(line_no, "bad vertex id '" + std::string(tok) + "'");
			ids.push_back(static_cast<vertex>(v));
		}
	}
	return vertex_set(std::move(ids));
}

std::string write_vertex_set(const vertex_set &s) {
	std::string out;
	for(std::size_t i = 0; i < s.size(); ++i) {
		if(i)
			out += ' ';
		out += std::to_string(s[i]);
	}
	out += '\n';
	return out;
}

} // namespace ctd
