#include <doctest.h>

#include <random>

#include "ctd/treedepth.hpp"
#include "oracles.hpp"

using namespace ctd;

TEST_SUITE("treedepth") {

TEST_CASE("small closed forms") {
	CHECK(treedepth(graph()) == 0);
	CHECK(treedepth(oracle::path(1)) == 1);
	for(int n = 2; n <= 4; ++n)
		CHECK(treedepth(oracle::complete(n)) == n);
	CHECK(treedepth(oracle::path(4)) == oracle::treedepth(oracle::path(4)));
	CHECK(treedepth(oracle::path(4)) == 3);
	CHECK(treedepth(oracle::cycle(4)) == oracle::treedepth(oracle::cycle(4)));
	CHECK(treedepth(oracle::cycle(4)) == 3);
}

TEST_CASE("threshold queries") {
	CHECK(td_at_most(graph(5, {}), 1));
	CHECK_FALSE(td_at_most(oracle::complete(3), 2));
	CHECK(oracle::treedepth(oracle::path(7)) == 3);
	CHECK(oracle::treedepth(oracle::path(8)) == 4);
	CHECK(td_at_most(oracle::path(7), 3));
	CHECK_FALSE(td_at_most(oracle::path(8), 3));
}

TEST_CASE("paths follow the logarithmic formula") {
	for(int n = 1; n <= 20; ++n) {
		int expect = 0;
		while((1 << expect) < n + 1)
			++expect;
		CHECK(treedepth(oracle::path(n)) == expect);
	}
}

TEST_CASE("solver agrees with the recursion on subsets") {
	std::mt19937_64 rng(5);
	for(int round = 0; round < 40; ++round) {
		int n = 2 + static_cast<int>(rng() % 10);
		auto g = oracle::random_connected(n, 0.25, rng);
		td_solver solver(g);
		oracle::treedepth_recursion rec(g);
		for(int q = 0; q < 10; ++q) {
			oracle::mask m = static_cast<oracle::mask>(rng() % (1u << n));
			std::vector<vertex> ids;
			for(int v = 0; v < n; ++v)
				if(m >> v & 1)
					ids.push_back(v);
			vertex_set s(ids);
			int td = rec(m);
			CHECK(solver.treedepth(s) == td);
			CHECK(solver.at_most(s, td));
			if(td > 0)
				CHECK_FALSE(solver.at_most(s, td - 1));
			auto rest = all_vertices(g).minus(s);
			CHECK(solver.at_most_without(s.ids(), rec(~m & ((1u << n) - 1))));
			(void)rest;
		}
	}
}

TEST_CASE("decompositions") {
	auto star = build_decomposition(oracle::star(4), 2);
	REQUIRE(star);
	CHECK(star->parent[0] == -1);
	for(int v = 1; v <= 4; ++v) {
		CHECK(star->parent[v] == 0);
		CHECK(star->depth[v] == 2);
	}
	CHECK_FALSE(build_decomposition(oracle::complete(4), 3));
	auto p3 = build_decomposition(oracle::path(3), 2);
	REQUIRE(p3);
	CHECK(p3->parent == std::vector<vertex>{1, -1, 1});
	CHECK(p3->max_depth() == 2);
	CHECK(validate_decomposition(oracle::path(3), *p3).empty());
}

TEST_CASE("built decompositions are valid and optimal") {
	std::mt19937_64 rng(9);
	for(int round = 0; round < 40; ++round) {
		int n = 1 + static_cast<int>(rng() % 11);
		auto g = oracle::random_connected(n, 0.2, rng);
		int td = oracle::treedepth(g);
		auto d = build_decomposition(g, td);
		REQUIRE(d);
		CHECK(validate_decomposition(g, *d).empty());
		CHECK(d->max_depth() == td);
		if(td > 1)
			CHECK_FALSE(build_decomposition(g, td - 1));
	}
}

TEST_CASE("validation catches broken forests") {
	auto g = oracle::path(3);
	td_decomposition bad{{-1, 0, 1}, {1, 2, 2}};
	CHECK_FALSE(validate_decomposition(g, bad).empty());
	td_decomposition flat{{-1, -1, -1}, {1, 1, 1}};
	CHECK_FALSE(validate_decomposition(g, flat).empty());
	td_decomposition cyc{{1, 0, -1}, {2, 2, 1}};
	CHECK_FALSE(validate_decomposition(g, cyc).empty());
}

TEST_CASE("upward closure") {
	td_decomposition chain{{-1, 0, 1, 2}, {1, 2, 3, 4}};
	CHECK(upward_closure(chain, {0}) == vertex_set{0});
	CHECK(upward_closure(chain, {3}) == vertex_set{0, 1, 2, 3});
	auto star = *build_decomposition(oracle::star(4), 2);
	CHECK(upward_closure(star, {2, 3}) == vertex_set{0, 2, 3});
	CHECK(upward_closure(star, {}).empty());
	CHECK(chain.is_ancestor(0, 3));
	CHECK_FALSE(chain.is_ancestor(3, 0));
	CHECK_FALSE(chain.is_ancestor(2, 2));
}

TEST_CASE("diameter bound") {
	CHECK(check_diameter_bound(oracle::star(5), 2));
	CHECK(check_diameter_bound(oracle::path(7), 3));
	CHECK(check_diameter_bound(oracle::complete(5), 5));
	CHECK_THROWS_AS(check_diameter_bound(oracle::path(8), 3), std::invalid_argument);
	CHECK_THROWS_AS(check_diameter_bound(oracle::disjoint(oracle::path(1), oracle::path(1)), 1),
	                std::invalid_argument);
}

TEST_CASE("removing vertices never raises treedepth") {
	std::mt19937_64 rng(21);
	for(int round = 0; round < 30; ++round) {
		int n = 2 + static_cast<int>(rng() % 10);
		auto g = oracle::random_connected(n, 0.3, rng);
		int whole = treedepth(g);
		vertex v = static_cast<vertex>(rng() % n);
		int less = treedepth(remove_vertices(g, {v}).g);
		CHECK(less <= whole);
		CHECK(less >= whole - 1);
	}
}

TEST_CASE("decomposition text round trip") {
	auto d = *build_decomposition(oracle::path(7), 3);
	CHECK(read_decomposition(write_decomposition(d)) == d);
	CHECK_THROWS_AS(read_decomposition("v 3 -1 1\n"), graph_format_error);
	CHECK_THROWS_AS(read_decomposition("x 0\n"), graph_format_error);
}

}
