#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ctd/decomposer.hpp"
#include "ctd/graph.hpp"
#include "ctd/lifter.hpp"

namespace ctd {

// Portable helpers over mt19937_64; the standard distributions are not
// reproducible across library implementations.
std::uint64_t draw_below(std::mt19937_64 &rng, std::uint64_t bound);
double draw_unit(std::mt19937_64 &rng);

struct generator_spec {
	std::string family = "random-gnp";   // random-gnp | grid | broom | subdivided-star | component-soup
	std::uint64_t seed = 1;
	int n = 12;              // random-gnp
	double p = 0.3;          // random-gnp
	int rows = 3, cols = 3;  // grid
	int eta = 1;             // broom, component-soup
	int branches = 6;        // broom bristles, subdivided-star arms
	int depth = 1;           // broom bristle length, subdivided-star arm length
	int classes = 2;         // component-soup
	int per_class = 5;
	int core = 4;
	bool big = false;        // component-soup: one extra vertex seeing the whole core

	std::string describe() const;
};

graph random_gnp(int n, double p, std::uint64_t seed);
graph grid_graph(int rows, int cols);
graph subdivided_star(int arms, int arm_length);
// Hub 0 with `branches` bristles (paths of `depth` vertices; the first is
// adjacent to the hub, the last to x) and a core clique K_{eta+1} on the top
// ids whose lowest vertex x is adjacent to the hub.
graph broom(int eta, int branches, int depth);
// Core clique on the top ids; `classes` groups of `per_class` small
// components (treedepth <= eta), each group attached to its own hub subset of
// the core.
graph component_soup(std::uint64_t seed, int classes, int per_class, int core, int eta, bool big);

graph generate(const generator_spec &spec);

struct experiment_config {
	std::string name;
	generator_spec gen;
	int eta = 1;
	std::string eps = "1";
	long long k = 4;
	constant_profile profile = constant_profile::custom;
	custom_constants custom{};
	bool size_gate = false;
	bool oracle_checks = true;   // exhaustive oracle checks (small instances only)
};

struct check {
	std::string name;
	bool pass = true;
	std::string detail;
};

struct report_row {
	int id = 0;
	std::string name;
	std::string instance;
	int n = 0;
	std::int64_t m = 0;
	int eta = 0;
	long long k = 0;
	std::string profile;
	std::string mode;
	int n_reduced = 0;
	int h = 0, marked = 0, connectors = 0;
	int rule2 = 0, rule3 = 0, rule4 = 0;
	std::string opt_g = "-", opt_reduced = "-";
	std::string lifted_value = "-", lifted_kind = "-";
	std::string ratio = "-", bound = "-";
	std::vector<check> checks;

	bool ok() const;
	std::string failed() const;   // comma-separated failing check names
};

struct report {
	std::vector<report_row> rows;
	bool ok() const;
};

report_row run_experiment(const experiment_config &cfg, int id = 0);
// Instances run in parallel; rows come back in config order.
report run_suite(const std::vector<experiment_config> &configs);

// Named suites: safeness-small, paper-constants, steiner-oracle.
std::vector<std::string> suite_names();
report run_named_suite(const std::string &name);

std::vector<std::string> report_columns();
std::string emit_report(const report &r, const std::string &format);   // "table" | "csv"

} // namespace ctd
