// Acceptance run: one PASS/FAIL line per criterion. Every expected value is
// recomputed here by brute force (tests/oracles.hpp) rather than taken from
// the library under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <omp.h>

#include "ctd/flow_steiner.hpp"
#include "ctd/harness.hpp"
#include "ctd/kernel.hpp"
#include "ctd/lifter.hpp"
#include "ctd/oracle.hpp"
#include "ctd/treedepth.hpp"
#include "oracles.hpp"

using namespace ctd;
using oracle::mask;

namespace {

struct outcome {
	bool pass = true;
	std::string detail;
	std::string failure;

	void fail(const std::string &why) {
		if(pass)
			failure = why;
		pass = false;
	}
};

mask bit(vertex v) { return mask{1} << v; }

mask to_mask(const vertex_set &s) {
	mask m = 0;
	for(vertex v : s)
		m |= bit(v);
	return m;
}

vertex_set from_mask(mask m) {
	std::vector<vertex> ids;
	for(; m; m &= m - 1)
		ids.push_back(std::countr_zero(m));
	return vertex_set(std::move(ids));
}

mask full(int n) { return n == 32 ? ~mask{0} : (mask{1} << n) - 1; }

// Brute-force view of one graph: adjacency masks plus a memoised treedepth.
struct brute {
	int n;
	std::vector<mask> adj;
	oracle::treedepth_recursion td;

	explicit brute(const graph &g) : n(g.num_vertices()), adj(oracle::adjacency_masks(g)), td(g) {
		if(n > 31)
			throw std::length_error("brute: graph too large");
	}

	bool deletion_set(mask s, int eta, mask within) { return td(within & ~s) <= eta; }
	bool connected(mask s) const { return oracle::connected_in(adj, s); }
	bool ctds(mask s, int eta) { return connected(s) && deletion_set(s, eta, full(n)); }

	// Calls f on every subset of `universe` with at most k elements, in
	// increasing size.
	void subsets(mask universe, long long k, const std::function<void(mask)> &f) const {
		std::vector<int> ids;
		for(mask u = universe; u; u &= u - 1)
			ids.push_back(std::countr_zero(u));
		const int limit = static_cast<int>(std::min<long long>(k, static_cast<long long>(ids.size())));
		for(int size = 0; size <= limit; ++size) {
			std::vector<int> pick(size);
			std::function<void(int, int, mask)> rec = [&](int from, int depth, mask acc) {
				if(depth == size) {
					f(acc);
					return;
				}
				for(int i = from; i + (size - depth) <= static_cast<int>(ids.size()); ++i)
					rec(i + 1, depth + 1, acc | bit(ids[i]));
			};
			rec(0, 0, 0);
		}
	}

	// min(OPT, k + 1) of connected deletion.
	long long opt(long long k, int eta) {
		long long best = k + 1;
		subsets(full(n), k, [&](mask s) {
			if(std::popcount(s) < best && ctds(s, eta))
				best = std::popcount(s);
		});
		return best;
	}

	// Classes: components of the region grouped by their neighbourhood
	// outside `gone`, minus H.
	std::map<mask, std::vector<mask>> classes(mask region, mask H, mask gone) const {
		std::map<mask, std::vector<mask>> out;
		for(mask c : oracle::components(adj, region)) {
			mask nb = 0;
			for(mask f = c; f; f &= f - 1)
				nb |= adj[std::countr_zero(f)];
			nb &= ~c & ~gone;
			out[nb & ~H].push_back(c);
		}
		return out;
	}

	bool nice(mask s, long long lambda, const std::map<mask, std::vector<mask>> &cls) const {
		for(const auto &[t, comps] : cls) {
			long long hit = 0;
			for(mask c : comps)
				hit += std::popcount(c & s);
			if(hit > lambda && (t & ~s))
				return false;
		}
		return true;
	}
};

params custom(int eta, long long k, long long d, long long lambda, long long t = 2) {
	return derive_params(eta, rational{1, 1}, k, constant_profile::custom, {d, lambda, t});
}

graph random_instance(std::mt19937_64 &rng, int lo, int hi, double plo, double phi) {
	int n = lo + static_cast<int>(rng() % (hi - lo + 1));
	double p = plo + (phi - plo) * draw_unit(rng);
	return oracle::random_connected(n, p, rng);
}

// Kernel instances on which the rules fire, drawn from the two rule-oriented
// families and from random graphs.
struct kernel_case {
	graph g;
	params p;
	std::string what;
};

kernel_case draw_kernel_case(std::mt19937_64 &rng, int max_n, int k_lo = 2, int k_hi = 5) {
	for(;;) {
		kernel_case c;
		int eta = 1 + static_cast<int>(rng() % 2);
		long long lambda = static_cast<long long>(rng() % 3);
		long long d = 1 + static_cast<long long>(rng() % 2);
		long long k = k_lo + static_cast<long long>(rng() % (k_hi - k_lo + 1));
		switch(rng() % 4) {
		case 0:
		case 1: {
			int classes = 1 + static_cast<int>(rng() % 3);
			int per = 2 + static_cast<int>(rng() % 4);
			int core = (eta == 1 ? 3 : 4) + static_cast<int>(rng() % 2);
			bool big = rng() % 2 == 0;
			std::uint64_t seed = rng();
			c.g = component_soup(seed, classes, per, core, eta, big);
			c.what = "soup seed=" + std::to_string(seed);
			break;
		}
		case 2: {
			int branches = 3 + static_cast<int>(rng() % 5);
			int depth = 1 + static_cast<int>(rng() % 2);
			c.g = broom(eta, branches, depth);
			c.what = "broom b=" + std::to_string(branches) + " depth=" + std::to_string(depth);
			break;
		}
		default:
			c.g = random_instance(rng, 6, max_n, 0.1, 0.3);
			c.what = "gnp";
		}
		if(c.g.num_vertices() > max_n)
			continue;
		c.p = custom(eta, k, d, lambda);
		c.what += " eta=" + std::to_string(eta) + " k=" + std::to_string(k) + " d=" + std::to_string(d) +
		          " lambda=" + std::to_string(lambda);
		return c;
	}
}

// 1 -------------------------------------------------------------------------

outcome treedepth_equivalence() {
	outcome out;
	long long exhaustive = 0, mismatches = 0;
	for(int n = 1; n <= 7; ++n) {
		const int pairs = n * (n - 1) / 2;
		std::vector<std::pair<vertex, vertex>> all;
		for(int u = 0; u < n; ++u)
			for(int v = u + 1; v < n; ++v)
				all.emplace_back(u, v);
		const long long total = 1LL << pairs;
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : exhaustive, mismatches)
		for(long long choose = 0; choose < total; ++choose) {
			std::vector<std::pair<vertex, vertex>> e;
			for(int i = 0; i < pairs; ++i)
				if(choose >> i & 1)
					e.push_back(all[i]);
			graph g(n, e);
			if(!is_connected(g))
				continue;
			++exhaustive;
			if(treedepth(g) != oracle::treedepth(g))
				++mismatches;
		}
	}
	if(mismatches)
		out.fail(std::to_string(mismatches) + " exhaustive mismatches");
	std::mt19937_64 rng(101);
	for(int i = 0; i < 500; ++i) {
		auto g = random_instance(rng, 8, 12, 0.05, 0.6);
		if(treedepth(g) != oracle::treedepth(g))
			out.fail("mismatch on random graph " + std::to_string(i));
	}
	out.detail = std::to_string(exhaustive) + " connected labelled graphs n<=7 and 500 random n in [8,12]";
	return out;
}

// 2 -------------------------------------------------------------------------

outcome decomposition_properties() {
	outcome out;
	std::mt19937_64 rng(202);
	int built = 0, refused = 0;
	for(int i = 0; i < 200; ++i) {
		auto g = random_instance(rng, 6, 30, 0.02, 0.12);
		int eta = 1 + static_cast<int>(rng() % 2);
		long long k = 2 + static_cast<long long>(rng() % 12);
		auto p = derive_params(eta, rational{1, 1}, k, constant_profile::paper);
		auto part = decompose(g, p);
		if(!part) {
			++refused;
			// The refusal must be backed by k + 1 disjoint sets of treedepth above eta.
			auto cover = extract_obstructions(g, eta);
			mask seen = 0;
			bool ok = static_cast<long long>(cover.obstructions.size()) > k;
			for(const auto &o : cover.obstructions) {
				ok = ok && !(seen & to_mask(o)) && oracle::treedepth(induced_subgraph(g, o).g) > eta;
				seen |= to_mask(o);
			}
			if(!ok)
				out.fail("instance " + std::to_string(i) + ": refusal without a certificate");
			continue;
		}
		++built;
		auto rep = verify_partition(g, p, *part);
		if(!rep.ok())
			for(const auto &c : rep.checks)
				if(!c.pass)
					out.fail("instance " + std::to_string(i) + ": " + c.name + " " + c.detail);
		// Cover and attachment once more, by masks.
		mask x = to_mask(part->X), z = to_mask(part->Z), r = to_mask(part->R);
		if((x & z) || (x & r) || (z & r) || (x | z | r) != full(g.num_vertices()))
			out.fail("instance " + std::to_string(i) + ": not a partition");
		auto adj = oracle::adjacency_masks(g);
		for(mask c : oracle::components(adj, r)) {
			mask nb = 0;
			for(mask f = c; f; f &= f - 1)
				nb |= adj[std::countr_zero(f)];
			if(std::popcount(nb & z) > eta)
				out.fail("instance " + std::to_string(i) + ": attachment");
		}
	}
	out.detail = std::to_string(built) + " partitions verified, " + std::to_string(refused) +
	             " certified refusals";
	if(built < 100)
		out.fail("too few feasible instances (" + std::to_string(built) + ")");
	return out;
}

// 3 -------------------------------------------------------------------------

outcome decomposition_property_four() {
	outcome out;
	std::mt19937_64 rng(303);
	int instances = 0;
	long long sets = 0;
	for(int attempt = 0; instances < 100 && attempt < 2000; ++attempt) {
		auto g = random_instance(rng, 7, 14, 0.1, 0.35);
		int eta = 1 + static_cast<int>(rng() % 2);
		long long k = 1 + static_cast<long long>(rng() % 4);
		auto p = derive_params(eta, rational{1, 1}, k, constant_profile::paper);
		auto part = decompose(g, p);
		if(!part)
			continue;
		brute b(g);
		mask x = to_mask(part->X), r = to_mask(part->R);
		std::vector<mask> attach;
		for(mask c : oracle::components(b.adj, r)) {
			mask nb = 0;
			for(mask f = c; f; f &= f - 1)
				nb |= b.adj[std::countr_zero(f)];
			attach.push_back(nb & x);
		}
		long long here = 0;
		b.subsets(full(b.n), k, [&](mask s) {
			if(!b.deletion_set(s, eta, full(b.n)))
				return;
			++here;
			for(mask a : attach)
				if(std::popcount(a & ~s) > eta)
					out.fail("instance " + std::to_string(attempt) + ": S=" + write_vertex_set(from_mask(s)));
		});
		if(here == 0)
			continue;
		++instances;
		sets += here;
	}
	out.detail = std::to_string(instances) + " instances, " + std::to_string(sets) + " deletion sets";
	if(instances < 100)
		out.fail("only " + std::to_string(instances) + " instances with a deletion set of size <= k");
	return out;
}

// 4-6 -----------------------------------------------------------------------

struct forcing_case {
	kernel_case c;
	kernel_state st;
};

std::vector<forcing_case> forcing_cases(int want) {
	std::vector<forcing_case> out;
	std::mt19937_64 rng(404);
	for(int attempt = 0; static_cast<int>(out.size()) < want && attempt < 20000; ++attempt) {
		auto c = draw_kernel_case(rng, 18, 3, 7);
		auto st = prepare(c.g, c.p);
		if(st.mode != kernel_mode::reduced || st.forced_batches.empty() || st.g1.num_vertices() > 24)
			continue;
		out.push_back({std::move(c), std::move(st)});
	}
	return out;
}

outcome forcing_observation(const std::vector<forcing_case> &cases) {
	outcome out;
	long long sets = 0;
	int inhabited = 0;
	for(const auto &fc : cases) {
		brute b(fc.st.g1);
		const mask H = to_mask(fc.st.H);
		long long here = 0;
		b.subsets(full(b.n), fc.st.p.k, [&](mask s) {
			if(!b.ctds(s, fc.st.p.eta))
				return;
			++here;
			if(H & ~s)
				out.fail(fc.c.what + ": solution " + write_vertex_set(from_mask(s)) + " misses H");
		});
		sets += here;
		inhabited += here > 0;
	}
	out.detail = std::to_string(cases.size()) + " instances with Rule 2 applied (" + std::to_string(inhabited) +
	             " with solutions), " + std::to_string(sets) + " solutions of g1";
	if(cases.size() < 50)
		out.fail("only " + std::to_string(cases.size()) + " instances");
	return out;
}

outcome gadget_strip_back(const std::vector<forcing_case> &cases) {
	outcome out;
	long long checked = 0;
	for(const auto &fc : cases) {
		brute b1(fc.st.g1);
		brute b(fc.c.g);
		const int eta = fc.st.p.eta;
		b1.subsets(full(b1.n), fc.st.p.k, [&](mask s) {
			if(!b1.ctds(s, eta))
				return;
			++checked;
			auto stripped = strip_gadgets(fc.st, from_mask(s));
			std::vector<vertex> orig;
			for(vertex v : stripped)
				orig.push_back(static_cast<vertex>(fc.st.g1.label(v)));
			mask m = to_mask(vertex_set(std::move(orig)));
			if(!b.ctds(m, eta) || std::popcount(m) > std::popcount(s))
				out.fail(fc.c.what + ": " + write_vertex_set(from_mask(s)) + " does not map to a solution");
		});
	}
	out.detail = std::to_string(checked) + " solutions of g1 mapped back";
	if(cases.size() < 50)
		out.fail("only " + std::to_string(cases.size()) + " instances");
	return out;
}

outcome rule2_cost(const std::vector<forcing_case> &cases) {
	outcome out;
	int compared = 0, slack_zero = 0;
	for(const auto &fc : cases) {
		const auto &st = fc.st;
		const int eta = st.p.eta;
		const long long k = st.p.k;
		brute b(fc.c.g), b1(st.g1);
		long long opt_g = b.opt(k, eta);
		long long opt_g1 = b1.opt(k, eta);
		++compared;
		if(opt_g > k) {
			// No solution within k: the bound is min(., k + 1) on both sides.
			if(opt_g1 > k + 1)
				out.fail(fc.c.what + ": capped value above k + 1");
			continue;
		}
		// The bound must hold for some optimum S* of g.
		bool witnessed = false;
		b.subsets(full(b.n), opt_g, [&](mask s) {
			if(witnessed || std::popcount(s) != opt_g || !b.ctds(s, eta))
				return;
			long long extra = 0;
			bool small = true;
			for(const auto &batch : st.forced_batches) {
				long long miss = 0;
				for(vertex v : batch)
					miss += !(s & bit(static_cast<vertex>(st.g1.label(v))));
				small = small && miss <= eta;
				extra += miss;
			}
			long long bound = std::min(opt_g + (1LL << eta) * extra, k + 1);
			if(small && opt_g1 <= bound)
				witnessed = true;
		});
		if(!witnessed)
			out.fail(fc.c.what + ": OPT(g1)=" + std::to_string(opt_g1) + " OPT(g)=" + std::to_string(opt_g));
		slack_zero += opt_g1 == opt_g;
	}
	out.detail = std::to_string(compared) + " instances, OPT(g1)=OPT(g) on " + std::to_string(slack_zero);
	if(cases.size() < 50)
		out.fail("only " + std::to_string(cases.size()) + " instances");
	return out;
}

// 7 -------------------------------------------------------------------------

outcome marking_safeness() {
	outcome out;
	std::mt19937_64 rng(707);
	int instances = 0;
	long long nice_sets = 0;
	for(int attempt = 0; instances < 50 && attempt < 20000; ++attempt) {
		auto c = draw_kernel_case(rng, 14);
		auto st = prepare(c.g, c.p);
		if(st.mode != kernel_mode::reduced || st.M.empty() || st.g1.num_vertices() > 24)
			continue;
		++instances;
		brute b(st.g1);
		const int eta = st.p.eta;
		const mask M = to_mask(st.M), H = to_mask(st.H), R = to_mask(st.R);
		const mask kept = full(b.n) & ~M;
		auto cls = b.classes(R & ~M, H, M);
		b.subsets(kept, st.p.k, [&](mask s) {
			if((H & ~s) || !b.deletion_set(s, eta, kept) || !b.nice(s, st.p.lambda, cls))
				return;
			++nice_sets;
			if(!b.deletion_set(s, eta, full(b.n)))
				out.fail(c.what + ": nice set " + write_vertex_set(from_mask(s)) + " fails on g1");
		});
	}
	out.detail = std::to_string(instances) + " instances with marked vertices, " + std::to_string(nice_sets) +
	             " nice deletion sets";
	if(instances < 50)
		out.fail("only " + std::to_string(instances) + " instances");
	return out;
}

// 8 and 11 ------------------------------------------------------------------

struct nice_stats {
	long long runs = 0, fixed = 0;
};

void check_make_nice(const kernel_state &st, const vertex_set &s1, outcome &out, nice_stats &stats,
                     const std::string &what) {
	const auto Y = st.removed();
	nice_result res;
	try {
		res = make_nice(st.g1, Y, s1, st.p, kernel_classes(st));
	} catch(const std::exception &e) {
		out.fail(what + ": make_nice threw " + e.what());
		return;
	}
	++stats.runs;
	stats.fixed += res.classes_fixed;
	brute b(st.g1);
	const int eta = st.p.eta;
	const mask y = to_mask(Y), in = to_mask(s1), got = to_mask(res.vertices);
	const mask kept = full(b.n) & ~y;
	auto cls = b.classes(to_mask(st.R) & ~y, to_mask(st.H), y);
	if(in & ~got)
		out.fail(what + ": output drops input vertices");
	if(!b.nice(got, st.p.lambda, cls))
		out.fail(what + ": output not nice");
	if(!b.connected(got) || !b.deletion_set(got, eta, kept))
		out.fail(what + ": output not a connected deletion set of g1 - Y");
	if(!b.deletion_set(got, eta, full(b.n)))
		out.fail(what + ": output not a deletion set of g1");
	const long long bound = (st.p.d + 2 * eta) * (1LL << eta) * res.classes_fixed;
	if(std::popcount(got) - std::popcount(in) > bound || res.added != std::popcount(got) - std::popcount(in))
		out.fail(what + ": growth above (d + 2 eta) 2^eta r");
}

std::vector<kernel_case> end_to_end_cases() {
	std::vector<kernel_case> out;
	auto add = [&](graph g, params p, std::string what) { out.push_back({std::move(g), p, std::move(what)}); };
	for(std::uint64_t seed = 1; seed <= 6; ++seed) {
		bool big = seed % 2 == 1;
		add(component_soup(seed, 2, big ? 4 : 5, 4, 1, big), custom(1, 5, 2, 2),
		    "soup seed=" + std::to_string(seed));
	}
	add(broom(2, 6, 1), custom(2, 2, 2, 2), "broom eta=2");
	add(broom(3, 6, 2), custom(3, 2, 2, 2), "broom eta=3");
	add(broom(3, 6, 2), custom(3, 2, 2, 1), "broom eta=3 lambda=1");
	add(subdivided_star(4, 2), custom(1, 5, 2, 2), "subdivided star");
	add(grid_graph(3, 3), custom(1, 6, 2, 2), "grid eta=1");
	add(grid_graph(3, 3), custom(2, 3, 2, 2), "grid eta=2");
	for(std::uint64_t seed = 1; seed <= 4; ++seed)
		add(random_gnp(10, 0.3, seed), custom(seed <= 2 ? 1 : 2, 4, 2, 2), "gnp seed=" + std::to_string(seed));
	std::mt19937_64 rng(1111);
	for(int i = 0; i < 40; ++i) {
		auto c = draw_kernel_case(rng, 16);
		out.push_back(std::move(c));
	}
	return out;
}

struct lift_summary {
	outcome soundness, nice;
	nice_stats stats;
	int instances = 0, reduced = 0;
	long long lifts = 0;
	double worst = 1.0;
};

lift_summary end_to_end() {
	lift_summary sum;
	for(const auto &c : end_to_end_cases()) {
		++sum.instances;
		auto st = reduce(c.g, c.p);
		const int eta = c.p.eta;
		const long long k = c.p.k;
		brute b(c.g);
		const long long opt_g = b.opt(k, eta);
		const double bound = std::pow(1.0 + c.p.effective_delta(), 4);
		sum.reduced += st.mode == kernel_mode::reduced;
		if(st.reduced.num_vertices() > 24) {
			sum.soundness.fail(c.what + ": reduced graph too large for the oracle");
			continue;
		}
		brute br(st.reduced);
		const long long kr = st.k_reduced;
		const long long opt_r = br.opt(kr, eta);
		std::vector<mask> optimal;
		if(opt_r <= kr) {
			br.subsets(full(br.n), opt_r, [&](mask s) {
				if(std::popcount(s) == opt_r && br.ctds(s, eta))
					optimal.push_back(s);
			});
		} else {
			// No solution within k': any k' + 1 vertices stand for "none".
			optimal.push_back(full(std::min<long long>(br.n, kr + 1)));
		}
		for(mask s : optimal) {
			++sum.lifts;
			auto sol = lift(st, from_mask(s));
			mask m = to_mask(sol.vertices);
			if(sol.kind == solution_kind::feasible) {
				if(!b.ctds(m, eta) || std::popcount(m) > k)
					sum.soundness.fail(c.what + ": feasible lift is not a solution");
				if(sol.value != std::popcount(m))
					sum.soundness.fail(c.what + ": value disagrees with size");
			} else {
				if(sol.value != k + 1 || sol.vertices != st.sentinel)
					sum.soundness.fail(c.what + ": malformed sentinel");
			}
			double ratio;
			if(opt_g == 0)
				ratio = sol.value == 0 ? 1.0 : INFINITY;
			else
				ratio = static_cast<double>(sol.value) / static_cast<double>(opt_g);
			sum.worst = std::max(sum.worst, ratio);
			if(ratio > bound * (1 + 1e-12))
				sum.soundness.fail(c.what + ": ratio " + std::to_string(ratio) + " above " + std::to_string(bound));
			if(st.mode == kernel_mode::reduced && opt_r <= kr) {
				std::vector<vertex> in_g1;
				for(vertex v : from_mask(s))
					in_g1.push_back(st.reduced_to_g1[v]);
				check_make_nice(st, vertex_set(std::move(in_g1)), sum.nice, sum.stats, c.what);
			}
		}
		// make_nice on every other admissible input of g1 - Y as well.
		if(st.mode == kernel_mode::reduced && st.g1.num_vertices() <= 24) {
			brute b1(st.g1);
			const mask y = to_mask(st.removed()), H = to_mask(st.H);
			const mask kept = full(b1.n) & ~y;
			b1.subsets(kept, k, [&](mask s) {
				if((H & ~s) || !b1.connected(s) || !b1.deletion_set(s, eta, kept))
					return;
				check_make_nice(st, from_mask(s), sum.nice, sum.stats, c.what);
			});
		}
	}
	char buf[160];
	std::snprintf(buf, sizeof buf, "%d instances (%d reduced), %lld lifts, worst ratio %.4f", sum.instances,
	              sum.reduced, sum.lifts, sum.worst);
	sum.soundness.detail = buf;
	sum.nice.detail = std::to_string(sum.stats.runs) + " runs, " + std::to_string(sum.stats.fixed) +
	                  " classes fixed";
	if(sum.stats.runs == 0)
		sum.nice.fail("no runs");
	return sum;
}

// 9 -------------------------------------------------------------------------

outcome steiner_agreement() {
	outcome out;
	std::mt19937_64 rng(909);
	for(int i = 0; i < 200; ++i) {
		auto g = random_instance(rng, 2, 10, 0.1, 0.5);
		int count = 1 + static_cast<int>(rng() % std::min(4, g.num_vertices()));
		vertex_set terms;
		while(static_cast<int>(terms.size()) < count)
			terms.insert(static_cast<vertex>(rng() % g.num_vertices()));
		auto dp = compute_steiner_tree(g, terms);
		auto bf = brute_steiner(g, terms);
		int want = oracle::steiner_vertices(g, terms);
		if(!dp || !bf) {
			out.fail("case " + std::to_string(i) + ": no tree on a connected graph");
			continue;
		}
		if(dp->cost() != bf->cost() || static_cast<int>(dp->vertices.size()) != want)
			out.fail("case " + std::to_string(i) + ": cost mismatch");
		if(!validate_steiner_tree(g, *dp).empty())
			out.fail("case " + std::to_string(i) + ": " + validate_steiner_tree(g, *dp));
	}
	out.detail = "200 cases";
	return out;
}

// 10 ------------------------------------------------------------------------

outcome min_cut_agreement() {
	outcome out;
	std::mt19937_64 rng(1010);
	int done = 0;
	while(done < 200) {
		auto g = random_instance(rng, 3, 10, 0.1, 0.6);
		vertex x = static_cast<vertex>(rng() % g.num_vertices());
		vertex y = static_cast<vertex>(rng() % g.num_vertices());
		if(x == y || g.has_edge(x, y))
			continue;
		++done;
		auto cut = min_vertex_cut(g, x, y);
		auto adj = oracle::adjacency_masks(g);
		bool separates = true;
		for(mask c : oracle::components(adj, full(g.num_vertices()) & ~to_mask(cut)))
			if((c & bit(x)) && (c & bit(y)))
				separates = false;
		if(!separates || cut.contains(x) || cut.contains(y) ||
		   static_cast<int>(cut.size()) != oracle::min_separator(g, x, y))
			out.fail("pair " + std::to_string(done));
	}
	out.detail = "200 non-adjacent pairs";
	return out;
}

// 12 ------------------------------------------------------------------------

outcome diameter_bound() {
	outcome out;
	std::mt19937_64 rng(1212);
	int kept = 0, drawn = 0;
	while(kept < 500) {
		++drawn;
		int eta = 1 + static_cast<int>(rng() % 4);
		auto g = random_instance(rng, 1, 16, 0.0, 0.12);
		if(oracle::treedepth(g) > eta)
			continue;
		++kept;
		int diam = oracle::diameter(g);
		if(diam > (1 << eta))
			out.fail("diameter " + std::to_string(diam) + " at eta " + std::to_string(eta));
		if(!check_diameter_bound(g, eta))
			out.fail("library check disagrees");
	}
	out.detail = "500 graphs kept of " + std::to_string(drawn) + " drawn";
	return out;
}

// 13 ------------------------------------------------------------------------

std::string slurp(const std::filesystem::path &p) {
	std::ifstream in(p, std::ios::binary);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

outcome determinism(const std::string &cli) {
	outcome out;
	std::string a, b, c;
	for(const auto &name : suite_names()) {
		a += emit_report(run_named_suite(name), "csv");
		b += emit_report(run_named_suite(name), "csv");
	}
	int saved = omp_get_max_threads();
	omp_set_num_threads(1);
	for(const auto &name : suite_names())
		c += emit_report(run_named_suite(name), "csv");
	omp_set_num_threads(saved);
	if(a != b)
		out.fail("two in-process runs differ");
	if(a != c)
		out.fail("single-threaded run differs");
	out.detail = "in-process runs identical";
	if(!cli.empty()) {
		auto dir = std::filesystem::temp_directory_path() / "ctd-acceptance";
		std::filesystem::create_directories(dir);
		std::string r1 = (dir / "run1.txt").string(), r2 = (dir / "run2.txt").string();
		int s1 = std::system((cli + " bench --suite all --out " + r1 + " > /dev/null 2>&1").c_str());
		int s2 = std::system((cli + " bench --suite all --threads 2 --out " + r2 + " > /dev/null 2>&1").c_str());
		if(s1 != 0 || s2 != 0)
			out.fail("bench exited with failure");
		else if(slurp(r1) != slurp(r2) || slurp(r1).empty())
			out.fail("two bench runs differ");
		else
			out.detail += ", two bench runs byte-identical (" + std::to_string(slurp(r1).size()) + " bytes)";
		std::filesystem::remove_all(dir);
	}
	return out;
}

} // namespace

int main(int argc, char **argv) {
	std::string cli = argc > 1 ? argv[1] : "";
	bool all_pass = true;
	auto report = [&](int id, const std::string &title, const std::function<outcome()> &run) {
		auto start = std::chrono::steady_clock::now();
		outcome o;
		try {
			o = run();
		} catch(const std::exception &e) {
			o.fail(std::string("exception: ") + e.what());
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		all_pass = all_pass && o.pass;
		char time[32];
		std::snprintf(time, sizeof time, "%.1fs", secs);
		std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " " << title << ": " << o.detail
		          << " [" << time << "]";
		if(!o.pass)
			std::cout << "; first failure: " << o.failure;
		std::cout << std::endl;
	};

	report(1, "treedepth equals the recursion", treedepth_equivalence);
	report(2, "decomposition output verifies", decomposition_properties);
	report(3, "components keep at most eta unhit X neighbours", decomposition_property_four);
	auto cases = forcing_cases(50);
	report(4, "forced vertices lie in every solution", [&] { return forcing_observation(cases); });
	report(5, "gadget solutions strip to solutions", [&] { return gadget_strip_back(cases); });
	report(6, "forcing cost bound", [&] { return rule2_cost(cases); });
	report(7, "marking safeness", marking_safeness);
	lift_summary lifted;
	bool lifted_done = false;
	auto run_lifts = [&] {
		if(!lifted_done)
			lifted = end_to_end();
		lifted_done = true;
	};
	report(8, "nice construction", [&] {
		run_lifts();
		return lifted.nice;
	});
	report(9, "Steiner trees match brute force", steiner_agreement);
	report(10, "vertex cuts match brute force", min_cut_agreement);
	report(11, "lifting soundness and ratio", [&] {
		run_lifts();
		return lifted.soundness;
	});
	report(12, "diameter bound", diameter_bound);
	report(13, "determinism", [&] { return determinism(cli); });
	return all_pass ? 0 : 1;
}
