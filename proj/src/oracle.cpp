#include "ctd/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "ctd/combinatorics.hpp"
#include "ctd/treedepth.hpp"
#include "flow_steiner_detail.hpp"

namespace ctd {

namespace detail {

// Solutions of exactly `size` vertices, lexicographic.
std::vector<vertex_set> tds_of_size(const graph &g, int size, int eta, bool connected, bool parallel) {
	const int n = g.num_vertices();
	const std::uint64_t total = binomial(n, size);
	auto accept = [&](const std::vector<int> &pick, td_solver &solver) {
		vertex_set s{std::vector<vertex>(pick.begin(), pick.end())};
		if(connected && size > 0 && !is_connected(g, s))
			return false;
		return solver.at_most_without(s.ids(), eta);
	};
	std::vector<vertex_set> out;
	if(!parallel || total < 64) {
		td_solver solver(g);
		std::vector<int> pick(size);
		for(int i = 0; i < size; ++i)
			pick[i] = i;
		do
			if(accept(pick, solver))
				out.emplace_back(std::vector<vertex>(pick.begin(), pick.end()));
		while(size > 0 && next_combination(pick, n));
		return out;
	}
	std::vector<char> hit(total, 0);
#pragma omp parallel
	{
		td_solver solver(g);
		const auto count = static_cast<std::int64_t>(total);
#pragma omp for schedule(dynamic, 32)
		for(std::int64_t idx = 0; idx < count; ++idx)
			hit[idx] = accept(unrank_combination(n, size, static_cast<std::uint64_t>(idx)), solver);
	}
	for(std::uint64_t idx = 0; idx < total; ++idx)
		if(hit[idx]) {
			auto pick = unrank_combination(n, size, idx);
			out.emplace_back(std::vector<vertex>(pick.begin(), pick.end()));
		}
	return out;
}

std::vector<vertex_set> enumerate(const graph &g, long long k, int eta, bool connected, bool parallel) {
	if(g.num_vertices() > oracle_max_vertices)
		throw std::length_error("oracle: graph has more than " + std::to_string(oracle_max_vertices) +
		                        " vertices");
	if(k < 0)
		throw std::invalid_argument("oracle: negative k");
	std::vector<vertex_set> out;
	const int top = static_cast<int>(std::min<long long>(k, g.num_vertices()));
	for(int size = 0; size <= top; ++size) {
		auto part = tds_of_size(g, size, eta, connected, parallel);
		out.insert(out.end(), part.begin(), part.end());
	}
	return out;
}

} // namespace detail

std::vector<vertex_set> enumerate_tds(const graph &g, long long k, int eta, bool connected) {
	return detail::enumerate(g, k, eta, connected, true);
}

oracle_report opt_ctds(const graph &g, long long k, int eta, bool enumerate) {
	return opt_tds(g, k, eta, true, enumerate);
}

oracle_report opt_tds(const graph &g, long long k, int eta, bool connected, bool enumerate) {
	if(g.num_vertices() > oracle_max_vertices)
		throw std::length_error("oracle: graph has more than " + std::to_string(oracle_max_vertices) +
		                        " vertices");
	if(k < 0)
		throw std::invalid_argument("oracle: negative k");
	oracle_report rep;
	rep.opt_value = k + 1;
	const int top = static_cast<int>(std::min<long long>(k, g.num_vertices()));
	for(int size = 0; size <= top; ++size) {
		auto part = detail::tds_of_size(g, size, eta, connected, true);
		if(!part.empty() && !rep.witness) {
			rep.opt_value = size;
			rep.witness = part.front();
			rep.optimal_count = static_cast<long long>(part.size());
			if(!enumerate)
				break;
		}
		if(enumerate)
			rep.feasible.insert(rep.feasible.end(), part.begin(), part.end());
	}
	return rep;
}

std::optional<steiner_tree> brute_steiner(const graph &g, const vertex_set &terminals) {
	check_ids(g, terminals);
	if(terminals.empty())
		throw std::invalid_argument("brute_steiner: no terminals");
	const int n = g.num_vertices();
	if(n > steiner_oracle_max_vertices)
		throw std::length_error("brute_steiner: graph has more than " +
		                        std::to_string(steiner_oracle_max_vertices) + " vertices");
	auto others = all_vertices(g).minus(terminals);
	const int m = static_cast<int>(others.size());
	for(int extra = 0; extra <= m; ++extra) {
		std::vector<int> pick(extra);
		for(int i = 0; i < extra; ++i)
			pick[i] = i;
		do {
			vertex_set span = terminals;
			for(int i : pick)
				span.insert(others[i]);
			if(is_connected(g, span))
				return detail::spanning_steiner_tree(g, span, terminals);
		} while(extra > 0 && next_combination(pick, m));
	}
	return std::nullopt;
}

} // namespace ctd
