#include "ctd/flow_steiner.hpp"

#include <algorithm>
#include <climits>
#include <queue>

#include <omp.h>

#include "ctd/combinatorics.hpp"
#include "flow_steiner_detail.hpp"

namespace ctd {

namespace {

struct flow_network {
	struct arc {
		int to;
		int cap;
		int rev;
	};
	std::vector<std::vector<arc>> out;

	explicit flow_network(int nodes) : out(nodes) {}

	void add(int u, int v, int cap) {
		out[u].push_back({v, cap, static_cast<int>(out[v].size())});
		out[v].push_back({u, 0, static_cast<int>(out[u].size()) - 1});
	}

	// One BFS augmenting path of unit bottleneck; arcs scanned in insertion
	// order, which follows ascending vertex ids.
	bool augment(int s, int t) {
		std::vector<std::pair<int, int>> pred(out.size(), {-1, -1});
		std::queue<int> q;
		q.push(s);
		pred[s] = {s, -1};
		while(!q.empty() && pred[t].first < 0) {
			int u = q.front();
			q.pop();
			for(int i = 0; i < static_cast<int>(out[u].size()); ++i) {
				const auto &a = out[u][i];
				if(a.cap > 0 && pred[a.to].first < 0) {
					pred[a.to] = {u, i};
					q.push(a.to);
				}
			}
		}
		if(pred[t].first < 0)
			return false;
		for(int v = t; v != s; v = pred[v].first) {
			auto &a = out[pred[v].first][pred[v].second];
			a.cap -= 1;
			out[v][a.rev].cap += 1;
		}
		return true;
	}

	std::vector<char> reachable(int s) const {
		std::vector<char> seen(out.size(), 0);
		std::queue<int> q;
		q.push(s);
		seen[s] = 1;
		while(!q.empty()) {
			int u = q.front();
			q.pop();
			for(const auto &a : out[u])
				if(a.cap > 0 && !seen[a.to]) {
					seen[a.to] = 1;
					q.push(a.to);
				}
		}
		return seen;
	}
};

} // namespace

vertex_set min_vertex_cut(const graph &g, vertex x, vertex y) {
	if(!g.valid(x) || !g.valid(y))
		throw std::out_of_range("min_vertex_cut: vertex id out of range");
	if(x == y)
		throw std::invalid_argument("min_vertex_cut: endpoints coincide");
	if(g.has_edge(x, y))
		throw std::invalid_argument("min_vertex_cut: endpoints are adjacent");
	const int n = g.num_vertices();
	const int inf = n + 1;
	// v_in = 2v, v_out = 2v + 1
	flow_network net(2 * n);
	for(vertex v = 0; v < n; ++v) {
		net.add(2 * v, 2 * v + 1, (v == x || v == y) ? inf : 1);
		for(vertex w : g.neighbors(v))
			net.add(2 * v + 1, 2 * w, inf);
	}
	const int source = 2 * x + 1;
	const int sink = 2 * y;
	while(net.augment(source, sink)) {
	}
	auto seen = net.reachable(source);
	std::vector<vertex> cut;
	for(vertex v = 0; v < n; ++v)
		if(v != x && v != y && seen[2 * v] && !seen[2 * v + 1])
			cut.push_back(v);
	return vertex_set(std::move(cut));
}

std::optional<steiner_tree> compute_steiner_tree(const graph &g, const vertex_set &terminals) {
	check_ids(g, terminals);
	if(terminals.empty())
		throw std::invalid_argument("compute_steiner_tree: no terminals");
	const int r = static_cast<int>(terminals.size());
	if(r > 20)
		throw std::invalid_argument("compute_steiner_tree: too many terminals");
	const int n = g.num_vertices();
	{
		auto dist = bfs_distances(g, terminals[0]);
		for(vertex t : terminals)
			if(dist[t] < 0)
				return std::nullopt;
	}
	const int full = (1 << r) - 1;
	constexpr int unreached = INT_MAX / 4;
	// back[mask][v]: >= 0 -> predecessor vertex on an edge into v;
	// < -1 -> merge of submask -(value + 2); -1 -> base (terminal itself).
	std::vector<std::vector<int>> cost(full + 1, std::vector<int>(n, unreached));
	std::vector<std::vector<int>> back(full + 1, std::vector<int>(n, -1));

	auto relax = [&](int mask) {
		using item = std::pair<int, vertex>;
		std::priority_queue<item, std::vector<item>, std::greater<>> pq;
		for(vertex v = 0; v < n; ++v)
			if(cost[mask][v] < unreached)
				pq.emplace(cost[mask][v], v);
		while(!pq.empty()) {
			auto [c, u] = pq.top();
			pq.pop();
			if(c != cost[mask][u])
				continue;
			for(vertex w : g.neighbors(u)) {
				if(c + 1 < cost[mask][w]) {
					cost[mask][w] = c + 1;
					back[mask][w] = u;
					pq.emplace(c + 1, w);
				}
			}
		}
	};

	for(int i = 0; i < r; ++i) {
		cost[1 << i][terminals[i]] = 0;
		relax(1 << i);
	}
	for(int mask = 1; mask <= full; ++mask) {
		if((mask & (mask - 1)) == 0)
			continue;
		const int low = mask & -mask;
		for(vertex v = 0; v < n; ++v) {
			for(int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
				if(!(sub & low))
					continue;
				int c = cost[sub][v] + cost[mask ^ sub][v];
				if(c < cost[mask][v]) {
					cost[mask][v] = c;
					back[mask][v] = -(sub + 2);
				}
			}
		}
		relax(mask);
	}

	std::vector<char> in_tree(n, 0);
	std::vector<std::pair<int, vertex>> stack{{full, terminals[0]}};
	while(!stack.empty()) {
		auto [mask, v] = stack.back();
		stack.pop_back();
		in_tree[v] = 1;
		int b = back[mask][v];
		if(b >= 0) {
			stack.emplace_back(mask, b);
		} else if(b < -1) {
			int sub = -(b + 2);
			stack.emplace_back(sub, v);
			stack.emplace_back(mask ^ sub, v);
		}
	}
	std::vector<vertex> ids;
	for(vertex v = 0; v < n; ++v)
		if(in_tree[v])
			ids.push_back(v);
	return detail::spanning_steiner_tree(g, vertex_set(std::move(ids)), terminals);
}

namespace detail {

steiner_tree spanning_steiner_tree(const graph &g, const vertex_set &span, const vertex_set &terminals) {
	const int n = g.num_vertices();
	std::vector<char> alive(n, 0);
	for(vertex v : span)
		alive[v] = 1;
	std::vector<std::vector<vertex>> adj(n);
	std::vector<vertex> parent(n, -2);
	std::queue<vertex> q;
	parent[terminals[0]] = -1;
	q.push(terminals[0]);
	while(!q.empty()) {
		vertex u = q.front();
		q.pop();
		for(vertex w : g.neighbors(u)) {
			if(alive[w] && parent[w] == -2) {
				parent[w] = u;
				adj[u].push_back(w);
				adj[w].push_back(u);
				q.push(w);
			}
		}
	}
	// Prune non-terminal leaves.
	std::vector<int> deg(n, 0);
	std::vector<char> keep(n, 0);
	for(vertex v : span)
		if(parent[v] != -2) {
			keep[v] = 1;
			deg[v] = static_cast<int>(adj[v].size());
		}
	std::vector<vertex> leaves;
	for(vertex v : span)
		if(keep[v] && deg[v] <= 1 && !terminals.contains(v))
			leaves.push_back(v);
	while(!leaves.empty()) {
		vertex v = leaves.back();
		leaves.pop_back();
		if(!keep[v])
			continue;
		keep[v] = 0;
		for(vertex w : adj[v])
			if(keep[w] && --deg[w] <= 1 && !terminals.contains(w))
				leaves.push_back(w);
	}
	steiner_tree t;
	std::vector<vertex> ids;
	for(vertex v : span)
		if(keep[v]) {
			ids.push_back(v);
			if(parent[v] >= 0)
				t.edges.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
		}
	std::sort(t.edges.begin(), t.edges.end());
	t.vertices = vertex_set(std::move(ids));
	t.terminals = terminals;
	return t;
}

std::vector<char> connectors_for_size(const graph &g, const vertex_set &candidates, int size,
                                      long long budget, bool parallel) {
	const int n = g.num_vertices();
	const int c = static_cast<int>(candidates.size());
	const std::uint64_t total = binomial(c, size);
	std::vector<char> hit(n, 0);

	auto visit = [&](const std::vector<int> &pick, std::vector<char> &mark) {
		std::vector<vertex> ids;
		ids.reserve(pick.size());
		for(int i : pick)
			ids.push_back(candidates[i]);
		auto tree = compute_steiner_tree(g, vertex_set(std::move(ids)));
		if(tree && static_cast<long long>(tree->vertices.size()) <= budget)
			for(vertex v : tree->vertices)
				mark[v] = 1;
	};

	if(!parallel) {
		std::vector<int> pick(size);
		for(int i = 0; i < size; ++i)
			pick[i] = i;
		do
			visit(pick, hit);
		while(next_combination(pick, c));
		return hit;
	}

#pragma omp parallel
	{
		std::vector<char> local(n, 0);
		const auto chunk = static_cast<std::int64_t>(total);
#pragma omp for schedule(dynamic, 16)
		for(std::int64_t idx = 0; idx < chunk; ++idx)
			visit(unrank_combination(c, size, static_cast<std::uint64_t>(idx)), local);
#pragma omp critical
		for(int v = 0; v < n; ++v)
			hit[v] |= local[v];
	}
	return hit;
}

vertex_set harvest(const graph &g, const vertex_set &candidates, long long t, long long budget,
                   bool parallel) {
	check_ids(g, candidates);
	if(t < 1)
		throw std::invalid_argument("harvest_connectors: t must be at least 1");
	if(budget < 0)
		throw std::invalid_argument("harvest_connectors: negative budget");
	const int c = static_cast<int>(candidates.size());
	const int max_size = static_cast<int>(std::min<long long>(t, c));
	std::vector<char> hit(g.num_vertices(), 0);
	for(int size = 1; size <= max_size; ++size) {
		// Every tree has at least |L| vertices.
		if(size > budget)
			break;
		auto part = connectors_for_size(g, candidates, size, budget, parallel);
		for(std::size_t v = 0; v < hit.size(); ++v)
			hit[v] |= part[v];
	}
	std::vector<vertex> ids;
	for(vertex v = 0; v < g.num_vertices(); ++v)
		if(hit[v])
			ids.push_back(v);
	return vertex_set(std::move(ids));
}

} // namespace detail

std::string validate_steiner_tree(const graph &g, const steiner_tree &t) {
	if(!t.terminals.is_subset_of(t.vertices))
		return "terminal missing from tree";
	if(t.edges.size() + 1 != t.vertices.size())
		return "edge count is not |V| - 1";
	std::vector<int> deg(g.num_vertices(), 0);
	for(auto [u, v] : t.edges) {
		if(!g.valid(u) || !g.valid(v) || !g.has_edge(u, v))
			return "tree edge not in graph";
		if(!t.vertices.contains(u) || !t.vertices.contains(v))
			return "tree edge leaves vertex set";
		++deg[u];
		++deg[v];
	}
	graph tree_graph(g.num_vertices(), t.edges);
	if(!is_connected(tree_graph, t.vertices))
		return "tree is disconnected";
	if(t.vertices.size() > 1)
		for(vertex v : t.vertices)
			if(deg[v] == 1 && !t.terminals.contains(v))
				return "non-terminal leaf " + std::to_string(v);
	return {};
}

vertex_set harvest_connectors(const graph &g, const vertex_set &candidates, long long t,
                              long long budget) {
	return detail::harvest(g, candidates, t, budget, true);
}

} // namespace ctd
