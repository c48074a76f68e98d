#include "ctd/lifter.hpp"

#include <stdexcept>

#include "ctd/treedepth.hpp"

namespace ctd {

std::string to_string(solution_kind k) {
	return k == solution_kind::feasible ? "feasible" : "sentinel";
}

bool verify_ctds(const graph &g, const vertex_set &s, int eta) {
	check_ids(g, s);
	if(!s.empty() && !is_connected(g, s))
		return false;
	td_solver solver(g);
	return solver.at_most_without(s.ids(), eta);
}

std::vector<vertex_set> heavy_classes(const graph &g, const vertex_set &s, long long lambda,
                                      const class_context &ctx) {
	std::vector<vertex_set> out;
	for(const auto &[t, comps] : neighbourhood_classes(g, ctx.region, ctx.H)) {
		long long hit = 0;
		for(const auto &c : comps)
			hit += static_cast<long long>(c.intersect(s).size());
		if(hit > lambda)
			out.push_back(t);
	}
	return out;
}

bool is_nice(const graph &g, const vertex_set &s, long long lambda, const class_context &ctx) {
	for(const auto &t : heavy_classes(g, s, lambda, ctx))
		if(!t.is_subset_of(s))
			return false;
	return true;
}

nice_result make_nice(const graph &g, const vertex_set &Y, const vertex_set &s, const params &p,
                      const class_context &ctx) {
	check_ids(g, Y);
	check_ids(g, s);
	if(s.intersects(Y))
		throw std::invalid_argument("make_nice: solution meets the deleted set");
	if(!ctx.H.is_subset_of(s))
		throw std::invalid_argument("make_nice: solution misses a forced vertex");
	if(!Y.is_subset_of(ctx.region))
		throw std::invalid_argument("make_nice: deleted set leaves the class region");
	if(static_cast<long long>(s.size()) > p.k)
		throw std::invalid_argument("make_nice: solution larger than k");
	auto sub = remove_vertices(g, Y);
	const int n = g.num_vertices();
	auto local_s = sub.restrict(s, n);
	if(!verify_ctds(sub.g, local_s, p.eta))
		throw std::invalid_argument("make_nice: input is not a connected deletion set of g - Y");
	class_context local{sub.restrict(ctx.H, n), sub.restrict(ctx.region.minus(Y), n)};

	nice_result out;
	vertex_set grown = local_s;
	for(const auto &[t, comps] : neighbourhood_classes(sub.g, local.region, local.H)) {
		long long hit = 0;
		for(const auto &c : comps)
			hit += static_cast<long long>(c.intersect(local_s).size());
		if(hit <= p.lambda || t.is_subset_of(local_s))
			continue;
		++out.classes_fixed;
		const vertex_set *home = nullptr;
		for(const auto &c : comps)
			if(c.intersects(local_s)) {
				home = &c;
				break;
			}
		const vertex target = home->intersect(local_s).front();
		grown = grown.unite(t);
		for(vertex w : t.minus(local_s)) {
			auto allowed = *home;
			allowed.insert(w);
			auto path = shortest_path(sub.g, w, target, allowed);
			if(path.empty())
				throw std::logic_error("make_nice: class vertex not linked to its component");
			grown = grown.unite(vertex_set(std::move(path)));
		}
	}
	out.vertices = sub.lift(grown);
	out.added = static_cast<long long>(out.vertices.size()) - static_cast<long long>(s.size());
	return out;
}

class_context kernel_classes(const kernel_state &st) {
	return {st.H, st.R};
}

vertex_set strip_gadgets(const kernel_state &st, const vertex_set &s1) {
	return s1.minus(st.gadget_vertices());
}

solution sentinel_solution(const kernel_state &st) {
	if(st.sentinel.empty())
		return {{}, solution_kind::feasible, 0};
	return {st.sentinel, solution_kind::sentinel, st.p.k + 1};
}

namespace {

solution feasible(const vertex_set &s, long long k) {
	long long size = static_cast<long long>(s.size());
	return {s, solution_kind::feasible, std::min(size, k + 1)};
}

} // namespace

solution lift(const kernel_state &st, const vertex_set &reduced_solution, std::vector<trace_entry> *steps) {
	auto note = [&](std::string rule, std::string detail) {
		if(steps)
			steps->push_back({std::move(rule), std::move(detail)});
	};
	auto fallback = [&](std::string why) {
		note("sentinel", std::move(why));
		return sentinel_solution(st);
	};
	const long long k = st.p.k;
	for(vertex v : reduced_solution)
		if(!st.reduced.valid(v))
			return fallback("vertex id " + std::to_string(v) + " outside the reduced graph");

	switch(st.mode) {
	case kernel_mode::no_instance:
		return fallback("reduced instance has no solution");
	case kernel_mode::trivial_empty:
		note("trivial", "every component already within treedepth bound");
		return feasible({}, k);
	case kernel_mode::pass_through:
		if(static_cast<long long>(reduced_solution.size()) > k)
			return fallback("solution larger than k");
		if(!verify_ctds(st.original, reduced_solution, st.p.eta))
			return fallback("not a connected deletion set of the input");
		note("pass-through", "solution kept as is");
		return feasible(reduced_solution, k);
	case kernel_mode::reduced:
		break;
	}

	if(static_cast<long long>(reduced_solution.size()) > st.k_reduced)
		return fallback("solution larger than k'");
	if(!verify_ctds(st.reduced, reduced_solution, st.p.eta))
		return fallback("not a connected deletion set of the reduced graph");
	std::vector<vertex> in_g1;
	for(vertex v : reduced_solution)
		in_g1.push_back(st.reduced_to_g1[v]);
	vertex_set s1(std::move(in_g1));
	if(!st.H.is_subset_of(s1))
		return fallback("solution misses a forced vertex");

	nice_result nice;
	try {
		nice = make_nice(st.g1, st.removed(), s1, st.p, kernel_classes(st));
	} catch(const std::exception &e) {
		return fallback(e.what());
	}
	note("make-nice", "fixed " + std::to_string(nice.classes_fixed) + " classes, added " +
	                      std::to_string(nice.added) + " vertices");
	if(!verify_ctds(st.g1, nice.vertices, st.p.eta))
		return fallback("nice solution is not a connected deletion set of g1");
	auto stripped = strip_gadgets(st, nice.vertices);
	std::vector<vertex> orig;
	for(vertex v : stripped)
		orig.push_back(static_cast<vertex>(st.g1.label(v)));
	vertex_set result(std::move(orig));
	note("strip", "dropped " + std::to_string(nice.vertices.size() - stripped.size()) + " gadget vertices");
	if(static_cast<long long>(result.size()) > k)
		return fallback("lifted solution larger than k");
	if(!verify_ctds(st.original, result, st.p.eta))
		return fallback("lifted solution is not a connected deletion set of the input");
	return feasible(result, k);
}

} // namespace ctd
