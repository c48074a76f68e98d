// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "ctd/decomposer.hpp"
#include "ctd/flow_steiner.hpp"
#include "ctd/harness.hpp"
#include "ctd/oracle.hpp"

namespace {

ctd::graph sample(int n, std::uint64_t seed) {
	for(;; ++seed) {
		auto g = ctd::random_gnp(n, 3.0 / n, seed);
		if(ctd::is_connected(g))
			return g;
	}
}

template <auto Harvest>
void harvest(benchmark::State &state) {
	auto g = ctd::grid_graph(4, static_cast<int>(state.range(0)));
	auto cand = ctd::all_vertices(g);
	for(auto _ : state)
		benchmark::DoNotOptimize(Harvest(g, cand, 2, 8));
}

template <auto Decompose>
void decompose(benchmark::State &state) {
	auto g = sample(static_cast<int>(state.range(0)), 7);
	auto p = ctd::derive_params(1, ctd::rational{1, 1}, 64, ctd::constant_profile::paper);
	for(auto _ : state)
		benchmark::DoNotOptimize(Decompose(g, p));
}

template <auto Enumerate>
void enumerate(benchmark::State &state) {
	auto g = sample(static_cast<int>(state.range(0)), 11);
	for(auto _ : state)
		benchmark::DoNotOptimize(Enumerate(g, 4, 1, true));
}

constexpr auto harvest_par = [](const ctd::graph &g, const ctd::vertex_set &c, long long t, long long b) {
	return ctd::harvest_connectors(g, c, t, b);
};
constexpr auto harvest_ser = [](const ctd::graph &g, const ctd::vertex_set &c, long long t, long long b) {
	return ctd::serial::harvest_connectors(g, c, t, b);
};
constexpr auto decompose_par = [](const ctd::graph &g, const ctd::params &p) { return ctd::decompose(g, p); };
constexpr auto decompose_ser = [](const ctd::graph &g, const ctd::params &p) {
	return ctd::serial::decompose(g, p);
};
constexpr auto enumerate_par = [](const ctd::graph &g, long long k, int eta, bool c) {
	return ctd::enumerate_tds(g, k, eta, c);
};
constexpr auto enumerate_ser = [](const ctd::graph &g, long long k, int eta, bool c) {
	return ctd::serial::enumerate_tds(g, k, eta, c);
};

} // namespace

BENCHMARK(harvest<harvest_par>)->Name("harvest/parallel")->Arg(4)->Arg(6);
BENCHMARK(harvest<harvest_ser>)->Name("harvest/serial")->Arg(4)->Arg(6);
BENCHMARK(decompose<decompose_par>)->Name("decompose/parallel")->Arg(20)->Arg(30);
BENCHMARK(decompose<decompose_ser>)->Name("decompose/serial")->Arg(20)->Arg(30);
BENCHMARK(enumerate<enumerate_par>)->Name("enumerate/parallel")->Arg(14)->Arg(18);
BENCHMARK(enumerate<enumerate_ser>)->Name("enumerate/serial")->Arg(14)->Arg(18);

BENCHMARK_MAIN();
