#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctd/graph.hpp"
#include "ctd/treedepth.hpp"

namespace ctd {

// Exact non-negative rational, used for the accuracy parameter.
struct rational {
	std::int64_t num = 0;
	std::int64_t den = 1;

	static rational parse(std::string_view text);   // "0.5", "1/2", "1"
	double value() const { return static_cast<double>(num) / static_cast<double>(den); }
	std::string str() const;

	friend bool operator==(const rational &, const rational &) = default;
};

enum class constant_profile { paper, custom };

struct custom_constants {
	long long d = 2;
	long long lambda = 2;
	long long t = 2;
};

// Constants of the reduction. Under the paper profile every constant is
// derived from (eta, eps): delta = eps/10, d = ceil(2^(eta+3) eta / delta),
// lambda = 2^eta ceil((d + 2 eta) / delta), t = 2^ceil(1/delta). Values that
// do not fit in 63 bits saturate at LLONG_MAX.
struct params {
	int eta = 1;
	rational eps{1, 1};
	long long k = 0;
	rational delta{1, 10};
	long long d = 0;
	long long lambda = 0;
	long long t = 0;
	long long t_log2 = 0;       // exponent of t (paper) or floor(log2 t) (custom)
	constant_profile profile = constant_profile::paper;
	bool size_gate = true;

	bool guarantee_void() const { return profile == constant_profile::custom; }
	// floor((1 + delta) k), the vertex budget for connector trees.
	long long connector_budget() const;
	// Smallest delta' for which the custom constants satisfy the three
	// inequalities the approximation argument needs:
	// eta 2^eta / d, (d + 2 eta) 2^eta / (lambda + 1), 1 / floor(log2 t).
	double effective_delta() const;
	std::string describe() const;

	friend bool operator==(const params &, const params &) = default;
};

params derive_params(int eta, rational eps, long long k, constant_profile profile,
                     const custom_constants &custom = {});

// Repeatedly takes the lowest-id component of g - X with treedepth above
// eta, shrinks it (ascending ids) to a minimal vertex set of treedepth
// above eta, and adds that set to X. The sets are pairwise disjoint, so more
// than k of them certify that no eta-treedepth deletion set of size k exists.
struct obstruction_cover {
	vertex_set X;
	std::vector<vertex_set> obstructions;
};

// Stops early once max_obstructions sets have been found (negative: no limit).
obstruction_cover extract_obstructions(const graph &g, int eta, long long max_obstructions = -1);
vertex_set approx_td_deletion(const graph &g, int eta);

struct partition {
	vertex_set X, Z, R;
	subgraph rest;               // g - X
	td_decomposition forest;     // decomposition of rest.g, depth <= eta
	std::vector<vertex_set> obstructions;

	// Role lookup by vertex id of the partitioned graph.
	bool in_XZ(vertex v) const { return X.contains(v) || Z.contains(v); }
	std::string dump() const;    // "X: ..", "Z: ..", "R: .." lines
};

// nullopt means no eta-treedepth deletion set of size <= k exists (more
// than k disjoint obstructions were found). g must be connected.
std::optional<partition> decompose(const graph &g, const params &p);

namespace serial {
std::optional<partition> decompose(const graph &g, const params &p);
} // namespace serial

struct check_result {
	std::string name;
	bool pass = true;
	std::string detail;
};

struct partition_report {
	std::vector<check_result> checks;
	bool ok() const;
	const check_result *find(std::string_view name) const;
};

// Checks: cover (X, Z, R partition V), deletion-set (td(g - X) <= eta),
// separator-size (|Z| <= eta (k + eta) |X|^2), attachment (every component C
// of g[R] has |N(C) & Z| <= eta).
partition_report verify_partition(const graph &g, const params &p, const partition &part);

} // namespace ctd
