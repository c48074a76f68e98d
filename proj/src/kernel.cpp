#include "ctd/kernel.hpp"

#include <climits>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctd/flow_steiner.hpp"
#include "ctd/treedepth.hpp"

namespace ctd {

namespace {

// lambda + eta + 1, the number of components a marking rule keeps.
long long keep_count(const params &p) {
	if(p.lambda > LLONG_MAX - p.eta - 2)
		return LLONG_MAX - 1;
	return p.lambda + p.eta + 1;
}

std::string ids(const vertex_set &s) {
	std::string out = "{";
	for(std::size_t i = 0; i < s.size(); ++i)
		out += (i ? "," : "") + std::to_string(s[i]);
	return out + "}";
}

void add_trace(kernel_state &s, std::string rule, std::string detail) {
	s.trace.push_back({std::move(rule), std::move(detail)});
}

// Marks every component past the first `keep` (components sorted by min id).
vertex_set mark_surplus(const std::vector<vertex_set> &comps, long long keep) {
	vertex_set out;
	for(std::size_t i = static_cast<std::size_t>(keep); i < comps.size(); ++i)
		out = out.unite(comps[i]);
	return out;
}

} // namespace

std::string to_string(kernel_mode m) {
	switch(m) {
	case kernel_mode::pass_through: return "pass-through";
	case kernel_mode::no_instance: return "no-instance";
	case kernel_mode::trivial_empty: return "trivial-empty";
	case kernel_mode::reduced: return "reduced";
	}
	return "unknown";
}

kernel_mode parse_kernel_mode(std::string_view s) {
	for(auto m : {kernel_mode::pass_through, kernel_mode::no_instance, kernel_mode::trivial_empty,
	              kernel_mode::reduced})
		if(to_string(m) == s)
			return m;
	throw std::invalid_argument("unknown kernel mode '" + std::string(s) + "'");
}

vertex_set kernel_state::gadget_vertices() const {
	vertex_set out;
	for(const auto &j : gadgets)
		out = out.unite(j.interior);
	return out;
}

std::vector<vertex> kernel_state::original_to_g1() const {
	std::vector<vertex> out(original.num_vertices(), -1);
	for(vertex v = 0; v < g1.num_vertices(); ++v)
		if(g1.label(v) >= 0)
			out[g1.label(v)] = v;
	return out;
}

std::vector<vertex> kernel_state::reduced_to_original() const {
	std::vector<vertex> out;
	if(mode == kernel_mode::pass_through) {
		for(vertex v = 0; v < reduced.num_vertices(); ++v)
			out.push_back(v);
	} else if(mode == kernel_mode::reduced) {
		for(vertex v : reduced_to_g1)
			out.push_back(static_cast<vertex>(g1.label(v)));
	}
	return out;
}

rule1_result rule1_drop_low_td_components(const graph &g, int eta) {
	td_solver solver(g);
	rule1_result out;
	for(auto &c : connected_components(g))
		if(!solver.at_most(c, eta))
			out.heavy.push_back(std::move(c));
	return out;
}

graph emit_no_instance(int eta) {
	const int q = eta + 2;
	std::vector<std::pair<vertex, vertex>> edges;
	for(int base : {0, q})
		for(int i = 0; i < q; ++i)
			for(int j = i + 1; j < q; ++j)
				edges.emplace_back(base + i, base + j);
	return graph(2 * q, edges);
}

namespace {

struct gate_terms {
	long long a;        // exponent of 2
	long long base;     // lambda + eta + 1
	long long e;        // exponent of k
	bool saturated;
};

gate_terms gate_of(const params &p) {
	gate_terms g{};
	const long double a = 3.0L * p.eta * p.eta + static_cast<long double>(p.d) * p.eta;
	const long double e = (3.0L * p.d + 6.0L * p.eta) * static_cast<long double>(p.t) + 1.0L;
	g.saturated = a > 1e15L || e > 1e15L || p.lambda > LLONG_MAX / 2;
	g.a = g.saturated ? 0 : static_cast<long long>(a);
	g.e = g.saturated ? 0 : static_cast<long long>(e);
	g.base = g.saturated ? 0 : p.lambda + p.eta + 1;
	return g;
}

using boost::multiprecision::cpp_int;

// 2^a base^(eta+1) (den + num) k^e, the threshold scaled by the delta denominator.
cpp_int scaled_threshold(const params &p, const gate_terms &g) {
	cpp_int v = 1;
	v <<= static_cast<unsigned>(g.a);
	v *= boost::multiprecision::pow(cpp_int(g.base), static_cast<unsigned>(p.eta + 1));
	v *= cpp_int(p.delta.den + p.delta.num);
	v *= boost::multiprecision::pow(cpp_int(p.k), static_cast<unsigned>(g.e));
	return v;
}

} // namespace

double size_gate_log2(const params &p) {
	if(p.k == 0)
		return -std::numeric_limits<double>::infinity();
	const double a = 3.0 * p.eta * p.eta + static_cast<double>(p.d) * p.eta;
	const double e = (3.0 * static_cast<double>(p.d) + 6.0 * p.eta) * static_cast<double>(p.t) + 1.0;
	return a + (p.eta + 1) * std::log2(static_cast<double>(p.lambda) + p.eta + 1) +
	       std::log2(1.0 + p.delta.value()) + e * std::log2(static_cast<double>(p.k));
}

bool size_gate_passes(long long n, const params &p) {
	if(n < 0)
		throw std::invalid_argument("size_gate_passes: negative vertex count");
	if(p.k == 0)
		return n == 0;
	if(n == 0)
		return true;
	const double lt = size_gate_log2(p);
	const double ln = std::log2(static_cast<double>(n));
	if(ln < lt - 1.0)
		return true;
	if(ln > lt + 1.0)
		return false;
	auto g = gate_of(p);
	if(g.saturated)
		return true;
	return cpp_int(n) * cpp_int(p.delta.den) <= scaled_threshold(p, g);
}

std::optional<std::string> size_gate_threshold(const params &p, int max_bits) {
	if(p.k == 0)
		return std::string("0");
	if(size_gate_log2(p) > max_bits)
		return std::nullopt;
	auto g = gate_of(p);
	if(g.saturated)
		return std::nullopt;
	cpp_int num = scaled_threshold(p, g);
	cpp_int whole = num / p.delta.den;
	cpp_int rest = num % p.delta.den;
	std::string out = whole.str();
	if(rest != 0) {
		cpp_int den = p.delta.den;
		cpp_int common = boost::multiprecision::gcd(rest, den);
		out += " " + cpp_int(rest / common).str() + "/" + cpp_int(den / common).str();
	}
	return out;
}

class_map neighbourhood_classes(const graph &g, const vertex_set &region, const vertex_set &H) {
	class_map out;
	for(auto &c : connected_components(g, region)) {
		auto t = neighborhood(g, c).minus(H);
		out[t].push_back(std::move(c));
	}
	return out;
}

void rule2_force_neighborhoods(kernel_state &s) {
	const auto &p = s.p;
	auto edges = s.g1.edges();
	auto labels = s.g1.labels();
	int n = s.g1.num_vertices();
	std::vector<char> has_gadget(n, 0);
	for(const auto &j : s.gadgets)
		has_gadget[j.anchor] = 1;
	bool grew = false;
	// H only grows, so one pass in component order is exhaustive.
	for(const auto &c : connected_components(s.g1, s.R)) {
		auto nx = neighborhood(s.g1, c).intersect(s.X);
		auto fresh = nx.minus(s.H);
		if(static_cast<long long>(fresh.size()) <= p.d + p.eta)
			continue;
		for(vertex u : nx) {
			if(has_gadget[u])
				continue;
			has_gadget[u] = 1;
			std::vector<vertex> inner;
			for(int i = 0; i < p.eta; ++i) {
				inner.push_back(n++);
				labels.push_back(-1);
				has_gadget.push_back(0);
			}
			for(std::size_t i = 0; i < inner.size(); ++i) {
				edges.emplace_back(u, inner[i]);
				for(std::size_t j = i + 1; j < inner.size(); ++j)
					edges.emplace_back(inner[i], inner[j]);
			}
			s.gadgets.push_back({u, vertex_set(std::move(inner))});
		}
		s.H = s.H.unite(nx);
		s.forced_batches.push_back(fresh);
		add_trace(s, "rule2", "component " + ids(c) + " forces " + ids(fresh));
		grew = true;
	}
	if(grew)
		s.g1 = graph(n, edges, labels);
}

void rule3_mark_component_families(kernel_state &s) {
	const long long keep = keep_count(s.p);
	td_solver solver(s.g1);
	for(;;) {
		std::map<std::pair<vertex_set, int>, std::vector<vertex_set>> family;
		for(auto &c : connected_components(s.g1, s.R)) {
			if(c.is_subset_of(s.M))
				continue;
			auto t = neighborhood(s.g1, c).minus(s.H);
			int td = solver.treedepth(c);
			family[{std::move(t), td}].push_back(std::move(c));
		}
		bool fired = false;
		for(const auto &[key, comps] : family) {
			if(static_cast<long long>(comps.size()) <= keep)
				continue;
			auto marked = mark_surplus(comps, keep);
			s.M = s.M.unite(marked);
			++s.rule3_applications;
			add_trace(s, "rule3", "T=" + ids(key.first) + " td=" + std::to_string(key.second) + " marks " +
			                          std::to_string(comps.size() - keep) + " of " +
			                          std::to_string(comps.size()) + " components " + ids(marked));
			fired = true;
		}
		if(!fired)
			break;
	}
}

namespace {

// One Rule 4 application on the current state; false if none triggers.
bool rule4_once(kernel_state &s, td_solver &solver) {
	const auto &p = s.p;
	const long long keep = keep_count(p);
	const auto removed = s.M.unite(s.H);
	for(const auto &c : connected_components(s.g1, s.R.minus(s.M))) {
		auto nc = neighborhood(s.g1, c).minus(removed);
		auto sub = induced_subgraph(s.g1, c);
		auto forest = build_decomposition(sub.g, p.eta);
		if(!forest)
			throw std::logic_error("rule4: component exceeds the treedepth bound");
		for(vertex local = 0; local < sub.g.num_vertices(); ++local) {
			auto up = sub.lift(upward_closure(*forest, vertex_set{local}));
			auto base = nc.unite(up);
			if(base.size() > 24)
				throw std::runtime_error("rule4: separator candidate set too large to enumerate");
			const std::uint32_t limit = 1u << base.size();
			for(std::uint32_t mask = 0; mask < limit; ++mask) {
				std::vector<vertex> pick;
				for(std::size_t i = 0; i < base.size(); ++i)
					if(mask >> i & 1u)
						pick.push_back(base[i]);
				vertex_set t(std::move(pick));
				std::vector<std::vector<vertex_set>> by_td(p.eta + 1);
				for(auto &piece : connected_components(s.g1, c.minus(t))) {
					if(neighborhood(s.g1, piece).minus(removed) != t)
						continue;
					int td = solver.treedepth(piece);
					if(td >= 1 && td <= p.eta)
						by_td[td].push_back(std::move(piece));
				}
				for(int i = 1; i <= p.eta; ++i) {
					const auto &group = by_td[i];
					if(static_cast<long long>(group.size()) <= keep)
						continue;
					auto marked = mark_surplus(group, keep);
					s.M = s.M.unite(marked);
					++s.rule4_applications;
					add_trace(s, "rule4", "C=" + ids(c) + " v=" + std::to_string(sub.to_parent[local]) +
					                          " T=" + ids(t) + " td=" + std::to_string(i) + " marks " +
					                          std::to_string(group.size() - keep) + " of " +
					                          std::to_string(group.size()) + " pieces " + ids(marked));
					return true;
				}
			}
		}
	}
	return false;
}

} // namespace

void rule4_mark_within_component(kernel_state &s) {
	td_solver solver(s.g1);
	while(rule4_once(s, solver)) {
	}
}

void build_connector_set(kernel_state &s) {
	auto candidates = all_vertices(s.g1).minus(s.M);
	s.N = harvest_connectors(s.g1, candidates, s.p.t, s.p.connector_budget());
	add_trace(s, "connectors", "t=" + std::to_string(s.p.t) + " budget=" +
	                               std::to_string(s.p.connector_budget()) + " |N|=" +
	                               std::to_string(s.N.size()) + " restores " +
	                               ids(s.M.intersect(s.N)));
}

kernel_state prepare(const graph &g, const params &p) {
	kernel_state s;
	s.p = p;
	s.original = g;
	s.k_reduced = p.k;
	auto r1 = rule1_drop_low_td_components(g, p.eta);
	if(!r1.heavy.empty())
		s.sentinel = r1.heavy.front();
	if(r1.no_solution()) {
		s.mode = kernel_mode::no_instance;
		s.reduced = emit_no_instance(p.eta);
		s.k_reduced = 1;
		add_trace(s, "no-instance", std::to_string(r1.heavy.size()) + " components exceed treedepth " +
		                                std::to_string(p.eta));
		return s;
	}
	if(p.size_gate && size_gate_passes(g.num_vertices(), p)) {
		s.mode = kernel_mode::pass_through;
		s.reduced = g;
		add_trace(s, "size-gate", "n=" + std::to_string(g.num_vertices()) + " within threshold");
		return s;
	}
	if(r1.heavy.empty()) {
		s.mode = kernel_mode::trivial_empty;
		s.reduced = graph();
		add_trace(s, "rule1", "every component has treedepth <= " + std::to_string(p.eta));
		return s;
	}
	s.mode = kernel_mode::reduced;
	auto base = induced_subgraph(g, r1.heavy.front());
	std::vector<std::int64_t> labels(base.to_parent.begin(), base.to_parent.end());
	auto base_edges = base.g.edges();
	s.g1 = graph(base.g.num_vertices(), base_edges, labels);
	s.base_size = s.g1.num_vertices();
	add_trace(s, "rule1", "kept component of " + std::to_string(s.base_size) + " vertices, dropped " +
	                          std::to_string(g.num_vertices() - s.base_size));

	auto part = decompose(s.g1, p);
	if(!part) {
		s.mode = kernel_mode::no_instance;
		s.reduced = emit_no_instance(p.eta);
		s.k_reduced = 1;
		s.g1 = graph();
		s.base_size = 0;
		add_trace(s, "decompose", "more than k disjoint obstructions");
		return s;
	}
	s.X = part->X;
	s.Z = part->Z;
	s.R = part->R;
	s.obstructions = part->obstructions;
	add_trace(s, "decompose", "|X|=" + std::to_string(s.X.size()) + " |Z|=" + std::to_string(s.Z.size()) +
	                              " |R|=" + std::to_string(s.R.size()));
	rule2_force_neighborhoods(s);
	rule3_mark_component_families(s);
	rule4_mark_within_component(s);
	// Rule 4 never creates a new Rule 3 family, but re-check to keep both saturated.
	for(;;) {
		int before = s.rule3_applications + s.rule4_applications;
		rule3_mark_component_families(s);
		rule4_mark_within_component(s);
		if(s.rule3_applications + s.rule4_applications == before)
			break;
	}
	return s;
}

kernel_state reduce(const graph &g, const params &p) {
	auto s = prepare(g, p);
	if(s.mode != kernel_mode::reduced)
		return s;
	build_connector_set(s);
	auto kept = remove_vertices(s.g1, s.removed());
	s.reduced = std::move(kept.g);
	s.reduced_to_g1 = std::move(kept.to_parent);
	add_trace(s, "output", "n'=" + std::to_string(s.reduced.num_vertices()) + " from n=" +
	                           std::to_string(g.num_vertices()) + ", deleted " + ids(s.removed()));
	return s;
}

} // namespace ctd
