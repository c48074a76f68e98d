#include "ctd/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "ctd/flow_steiner.hpp"
#include "ctd/kernel.hpp"
#include "ctd/oracle.hpp"
#include "ctd/treedepth.hpp"

namespace ctd {

std::uint64_t draw_below(std::mt19937_64 &rng, std::uint64_t bound) {
	if(bound == 0)
		throw std::invalid_argument("draw_below: empty range");
	return rng() % bound;
}

double draw_unit(std::mt19937_64 &rng) {
	return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string generator_spec::describe() const {
	std::ostringstream out;
	out << family << "(";
	if(family == "random-gnp")
		out << "n=" << n << ",p=" << p << ",seed=" << seed;
	else if(family == "grid")
		out << rows << "x" << cols;
	else if(family == "broom")
		out << "eta=" << eta << ",branches=" << branches << ",depth=" << depth;
	else if(family == "subdivided-star")
		out << "arms=" << branches << ",length=" << depth;
	else if(family == "component-soup")
		out << "seed=" << seed << ",classes=" << classes << ",per-class=" << per_class << ",core=" << core
		    << ",eta=" << eta << (big ? ",big" : "");
	out << ")";
	return out.str();
}

graph random_gnp(int n, double p, std::uint64_t seed) {
	if(n < 0 || p < 0 || p > 1)
		throw std::invalid_argument("random-gnp: need n >= 0 and 0 <= p <= 1");
	std::mt19937_64 rng(seed);
	std::vector<std::pair<vertex, vertex>> edges;
	for(vertex u = 0; u < n; ++u)
		for(vertex v = u + 1; v < n; ++v)
			if(draw_unit(rng) < p)
				edges.emplace_back(u, v);
	return graph(n, edges);
}

graph grid_graph(int rows, int cols) {
	if(rows < 1 || cols < 1)
		throw std::invalid_argument("grid: need positive dimensions");
	std::vector<std::pair<vertex, vertex>> edges;
	for(int r = 0; r < rows; ++r)
		for(int c = 0; c < cols; ++c) {
			vertex v = r * cols + c;
			if(c + 1 < cols)
				edges.emplace_back(v, v + 1);
			if(r + 1 < rows)
				edges.emplace_back(v, v + cols);
		}
	return graph(rows * cols, edges);
}

graph subdivided_star(int arms, int arm_length) {
	if(arms < 0 || arm_length < 1)
		throw std::invalid_argument("subdivided-star: need arms >= 0 and length >= 1");
	std::vector<std::pair<vertex, vertex>> edges;
	vertex next = 1;
	for(int a = 0; a < arms; ++a) {
		vertex prev = 0;
		for(int i = 0; i < arm_length; ++i) {
			edges.emplace_back(prev, next);
			prev = next++;
		}
	}
	return graph(next, edges);
}

graph broom(int eta, int branches, int depth) {
	if(eta < 1 || branches < 0 || depth < 1)
		throw std::invalid_argument("broom: need eta >= 1, branches >= 0, depth >= 1");
	const int n = 1 + branches * depth + eta + 1;
	const vertex x = n - eta - 1;
	std::vector<std::pair<vertex, vertex>> edges;
	edges.emplace_back(0, x);
	for(int b = 0; b < branches; ++b) {
		const vertex first = 1 + b * depth;
		edges.emplace_back(0, first);
		for(int i = 0; i + 1 < depth; ++i)
			edges.emplace_back(first + i, first + i + 1);
		edges.emplace_back(first + depth - 1, x);
	}
	for(vertex u = x; u < n; ++u)
		for(vertex v = u + 1; v < n; ++v)
			edges.emplace_back(u, v);
	return graph(n, edges);
}

graph component_soup(std::uint64_t seed, int classes, int per_class, int core, int eta, bool big) {
	if(classes < 0 || per_class < 0 || core < 2 || eta < 1)
		throw std::invalid_argument("component-soup: need classes, per-class >= 0, core >= 2, eta >= 1");
	std::mt19937_64 rng(seed);
	std::vector<std::vector<int>> hubs;
	for(int c = 0; c < classes; ++c) {
		std::vector<int> pick;
		for(int attempt = 0; attempt < 32; ++attempt) {
			const int size = 1 + static_cast<int>(draw_below(rng, core - 1));
			std::vector<int> all(core);
			for(int i = 0; i < core; ++i)
				all[i] = i;
			for(int i = 0; i < size; ++i)
				std::swap(all[i], all[i + draw_below(rng, core - i)]);
			pick.assign(all.begin(), all.begin() + size);
			std::sort(pick.begin(), pick.end());
			if(std::find(hubs.begin(), hubs.end(), pick) == hubs.end())
				break;
		}
		hubs.push_back(pick);
	}
	// Component shapes first, so the core can take the top ids.
	std::vector<std::pair<int, int>> layout;                // (class, size)
	for(int c = 0; c < classes; ++c)
		for(int i = 0; i < per_class; ++i) {
			int size = eta == 1 ? 1 : 1 + static_cast<int>(draw_below(rng, 3));
			layout.emplace_back(c, size);
		}
	int n = big ? 1 : 0;
	for(auto [c, size] : layout)
		n += size;
	const vertex core_base = n;
	n += core;
	std::vector<std::pair<vertex, vertex>> edges;
	vertex next = 0;
	for(auto [c, size] : layout) {
		for(int i = 0; i + 1 < size; ++i)
			edges.emplace_back(next + i, next + i + 1);
		// Attach through the middle of a path so it stays within treedepth 2.
		const vertex attach = next + (size == 3 ? 1 : 0);
		for(int h : hubs[c])
			edges.emplace_back(attach, core_base + h);
		next += size;
	}
	if(big) {
		for(int h = 0; h < core; ++h)
			edges.emplace_back(next, core_base + h);
		++next;
	}
	for(int i = 0; i < core; ++i)
		for(int j = i + 1; j < core; ++j)
			edges.emplace_back(core_base + i, core_base + j);
	return graph(n, edges);
}

graph generate(const generator_spec &s) {
	if(s.family == "random-gnp")
		return random_gnp(s.n, s.p, s.seed);
	if(s.family == "grid")
		return grid_graph(s.rows, s.cols);
	if(s.family == "broom")
		return broom(s.eta, s.branches, s.depth);
	if(s.family == "subdivided-star")
		return subdivided_star(s.branches, s.depth);
	if(s.family == "component-soup")
		return component_soup(s.seed, s.classes, s.per_class, s.core, s.eta, s.big);
	throw std::invalid_argument("unknown generator family '" + s.family + "'");
}

bool report_row::ok() const {
	return std::all_of(checks.begin(), checks.end(), [](const check &c) { return c.pass; });
}

std::string report_row::failed() const {
	std::string out;
	for(const auto &c : checks)
		if(!c.pass)
			out += (out.empty() ? "" : ",") + c.name;
	return out;
}

bool report::ok() const {
	return std::all_of(rows.begin(), rows.end(), [](const report_row &r) { return r.ok(); });
}

namespace {

std::string fixed4(double v) {
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.4f", v);
	return buf;
}

void add(report_row &row, std::string name, bool pass, std::string detail = {}) {
	row.checks.push_back({std::move(name), pass, std::move(detail)});
}

vertex_set to_original(const kernel_state &st, const vertex_set &in_g1) {
	std::vector<vertex> out;
	for(vertex v : in_g1)
		out.push_back(static_cast<vertex>(st.g1.label(v)));
	return vertex_set(std::move(out));
}

// Structural invariants that need no oracle.
void structural_checks(const kernel_state &st, report_row &row) {
	const auto &p = st.p;
	auto base = induced_subgraph(st.g1, all_vertices(st.g1).minus(st.gadget_vertices()));
	partition part;
	part.X = st.X;
	part.Z = st.Z;
	part.R = st.R;
	auto rep = verify_partition(base.g, p, part);
	for(const auto &c : rep.checks)
		add(row, "partition-" + c.name, c.pass, c.detail);

	bool threshold = true;
	std::string why;
	for(const auto &c : connected_components(st.g1, st.R)) {
		auto nb = neighborhood(st.g1, c);
		auto nx = nb.intersect(st.X).minus(st.H);
		if(static_cast<long long>(nx.size()) > p.d + p.eta ||
		   static_cast<long long>(nb.minus(st.H).size()) > p.d + 2 * p.eta) {
			threshold = false;
			why = "component at " + std::to_string(c.front());
			break;
		}
	}
	add(row, "forcing-saturated", threshold, why);

	bool gadgets = st.H.is_subset_of(st.X);
	for(const auto &j : st.gadgets) {
		gadgets = gadgets && st.H.contains(j.anchor) && static_cast<int>(j.interior.size()) == p.eta;
		auto closed = j.interior;
		closed.insert(j.anchor);
		gadgets = gadgets && neighborhood(st.g1, j.interior) == vertex_set{j.anchor} &&
		          static_cast<std::int64_t>(induced_subgraph(st.g1, closed).g.num_edges()) ==
		              static_cast<std::int64_t>(p.eta + 1) * p.eta / 2;
	}
	gadgets = gadgets && st.gadgets.size() == st.H.size();
	add(row, "gadget-registry", gadgets);
	add(row, "marks-inside-R", st.M.is_subset_of(st.R));
	auto expect = remove_vertices(st.g1, st.removed());
	add(row, "reduced-induced", expect.g == st.reduced && expect.to_parent == st.reduced_to_g1);
}

void oracle_checks(const kernel_state &st, const experiment_config &cfg, report_row &row, double delta_eff) {
	const auto &p = st.p;
	const long long k = p.k;
	const auto &g = st.original;
	auto opt = opt_ctds(g, k, p.eta, true);
	row.opt_g = std::to_string(opt.opt_value);
	std::vector<vertex_set> optimal;
	for(const auto &s : opt.feasible)
		if(static_cast<long long>(s.size()) == opt.opt_value)
			optimal.push_back(s);

	if(st.mode == kernel_mode::no_instance)
		add(row, "no-instance-sound", opt.opt_value == k + 1);

	if(st.mode == kernel_mode::reduced) {
		const auto g1_ctds = opt_ctds(st.g1, k, p.eta, true);
		bool forced = true, stripped = true;
		for(const auto &s : g1_ctds.feasible) {
			if(!st.H.is_subset_of(s))
				forced = false;
			auto back = to_original(st, strip_gadgets(st, s));
			if(back.size() > s.size() || !verify_ctds(g, back, p.eta))
				stripped = false;
		}
		add(row, "forcing", forced);
		add(row, "gadget-stripping", stripped);

		bool count_ok = true, cost_ok = true;
		if(opt.opt_value <= k) {
			auto to_g1 = st.original_to_g1();
			for(const auto &s : optimal) {
				std::vector<vertex> mapped;
				for(vertex v : s)
					if(to_g1[v] >= 0)
						mapped.push_back(to_g1[v]);
				vertex_set s1(std::move(mapped));
				const auto applications = static_cast<long long>(st.forced_batches.size());
				if(applications * p.d > static_cast<long long>(s.size()))
					count_ok = false;
				long long extra = 0;
				for(const auto &batch : st.forced_batches) {
					auto missing = static_cast<long long>(batch.minus(s1).size());
					if(missing > p.eta)
						cost_ok = false;
					extra += missing;
				}
				if(g1_ctds.opt_value > opt.opt_value + (1LL << p.eta) * extra)
					cost_ok = false;
			}
		}
		add(row, "forcing-count", count_ok);
		add(row, "forcing-cost", cost_ok);

		// Nice deletion sets of g1 - M containing H stay deletion sets of g1.
		auto trimmed = remove_vertices(st.g1, st.M);
		const int n1 = st.g1.num_vertices();
		class_context ctx{trimmed.restrict(st.H, n1), trimmed.restrict(st.R.minus(st.M), n1)};
		bool marking = true;
		td_solver full(st.g1);
		for(const auto &s : enumerate_tds(trimmed.g, k, p.eta, false)) {
			if(!ctx.H.is_subset_of(s) || !is_nice(trimmed.g, s, p.lambda, ctx))
				continue;
			if(!full.at_most_without(trimmed.lift(s).ids(), p.eta)) {
				marking = false;
				break;
			}
		}
		add(row, "marking-safeness", marking);
	}

	// Every optimal solution of the reduced instance lifts soundly.
	std::vector<vertex_set> candidates;
	if(st.reduced.num_vertices() <= oracle_max_vertices) {
		auto red = opt_ctds(st.reduced, st.k_reduced, p.eta, true);
		row.opt_reduced = std::to_string(red.opt_value);
		for(const auto &s : red.feasible)
			if(static_cast<long long>(s.size()) == red.opt_value)
				candidates.push_back(s);
	}
	if(candidates.empty())
		candidates.push_back({});
	bool sound = true, nice_ok = true, within = true;
	double worst = 0;
	long long worst_value = -1;
	std::string worst_kind;
	const double bound = std::pow(1.0 + delta_eff, 4);
	for(const auto &s : candidates) {
		auto lifted = lift(st, s);
		if(lifted.kind == solution_kind::feasible) {
			sound = sound && static_cast<long long>(lifted.vertices.size()) <= k &&
			        lifted.value == static_cast<long long>(lifted.vertices.size()) &&
			        verify_ctds(g, lifted.vertices, p.eta);
		} else {
			sound = sound && lifted.value == k + 1 && lifted.vertices == st.sentinel;
		}
		double ratio = opt.opt_value == 0 ? (lifted.value == 0 ? 1.0 : INFINITY)
		                                  : static_cast<double>(lifted.value) / static_cast<double>(opt.opt_value);
		within = within && ratio <= bound + 1e-9;
		if(ratio > worst || worst_value < 0) {
			worst = ratio;
			worst_value = lifted.value;
			worst_kind = to_string(lifted.kind);
		}
		if(st.mode == kernel_mode::reduced && static_cast<long long>(s.size()) <= st.k_reduced &&
		   verify_ctds(st.reduced, s, p.eta)) {
			std::vector<vertex> in_g1;
			for(vertex v : s)
				in_g1.push_back(st.reduced_to_g1[v]);
			vertex_set s1(std::move(in_g1));
			if(st.H.is_subset_of(s1)) {
				auto nice = make_nice(st.g1, st.removed(), s1, p, kernel_classes(st));
				auto reduced_g = remove_vertices(st.g1, st.removed());
				const int n1 = st.g1.num_vertices();
				class_context ctx{reduced_g.restrict(st.H, n1), reduced_g.restrict(st.R.minus(st.removed()), n1)};
				auto local = reduced_g.restrict(nice.vertices, n1);
				const long long cap = (p.d + 2LL * p.eta) * (1LL << p.eta) * nice.classes_fixed;
				nice_ok = nice_ok && s1.is_subset_of(nice.vertices) && nice.added <= cap &&
				          is_nice(reduced_g.g, local, p.lambda, ctx) && verify_ctds(reduced_g.g, local, p.eta);
			}
		}
	}
	add(row, "lifting-soundness", sound);
	add(row, "lifting-ratio", within, "bound " + fixed4(bound));
	if(st.mode == kernel_mode::reduced)
		add(row, "nice-construction", nice_ok);
	row.lifted_value = std::to_string(worst_value);
	row.lifted_kind = worst_kind;
	row.ratio = std::isfinite(worst) ? fixed4(worst) : "inf";
	row.bound = fixed4(bound);
	(void)cfg;
}

} // namespace

report_row run_experiment(const experiment_config &cfg, int id) {
	report_row row;
	row.id = id;
	row.name = cfg.name;
	row.instance = cfg.gen.describe();
	row.eta = cfg.eta;
	row.k = cfg.k;
	row.profile = cfg.profile == constant_profile::paper ? "paper" : "custom";
	try {
		auto g = generate(cfg.gen);
		row.n = g.num_vertices();
		row.m = g.num_edges();
		auto p = derive_params(cfg.eta, rational::parse(cfg.eps), cfg.k, cfg.profile, cfg.custom);
		p.size_gate = cfg.size_gate;
		auto st = reduce(g, p);
		row.mode = to_string(st.mode);
		row.n_reduced = st.reduced.num_vertices();
		row.h = static_cast<int>(st.H.size());
		row.marked = static_cast<int>(st.M.size());
		row.connectors = static_cast<int>(st.N.size());
		row.rule2 = static_cast<int>(st.forced_batches.size());
		row.rule3 = st.rule3_applications;
		row.rule4 = st.rule4_applications;
		if(st.mode == kernel_mode::reduced)
			structural_checks(st, row);
		if(st.mode == kernel_mode::pass_through)
			add(row, "pass-through-identity", st.reduced == g && st.k_reduced == cfg.k);
		const double delta_eff = p.profile == constant_profile::paper ? p.delta.value() : p.effective_delta();
		if(cfg.oracle_checks && g.num_vertices() <= oracle_max_vertices &&
		   st.g1.num_vertices() <= oracle_max_vertices)
			oracle_checks(st, cfg, row, delta_eff);
	} catch(const std::exception &e) {
		add(row, "stage-error", false, e.what());
	}
	return row;
}

report run_suite(const std::vector<experiment_config> &configs) {
	report r;
	r.rows.resize(configs.size());
	const auto count = static_cast<std::int64_t>(configs.size());
#pragma omp parallel for schedule(dynamic, 1)
	for(std::int64_t i = 0; i < count; ++i)
		r.rows[i] = run_experiment(configs[i], static_cast<int>(i));
	return r;
}

namespace {

std::vector<experiment_config> small_instances(constant_profile profile) {
	std::vector<experiment_config> out;
	auto push = [&](std::string name, generator_spec gen, int eta, long long k) {
		experiment_config c;
		c.name = std::move(name);
		c.gen = gen;
		c.eta = eta;
		c.k = k;
		c.profile = profile;
		c.size_gate = profile == constant_profile::paper;
		out.push_back(c);
	};
	for(std::uint64_t seed = 1; seed <= 6; ++seed) {
		generator_spec s;
		s.family = "component-soup";
		s.seed = seed;
		s.classes = 2;
		s.per_class = seed % 2 ? 4 : 5;
		s.core = 4;
		s.eta = 1;
		s.big = seed % 2 == 1;
		push("soup", s, 1, 5);
	}
	{
		generator_spec s;
		s.family = "broom";
		s.eta = 2;
		s.branches = 6;
		s.depth = 1;
		push("broom", s, 2, 2);
		s.eta = 3;
		s.depth = 2;
		push("broom", s, 3, 2);
	}
	{
		generator_spec s;
		s.family = "subdivided-star";
		s.branches = 4;
		s.depth = 2;
		push("star", s, 1, 5);
	}
	{
		generator_spec s;
		s.family = "grid";
		s.rows = 3;
		s.cols = 3;
		push("grid", s, 1, 6);
		push("grid", s, 2, 3);
	}
	for(std::uint64_t seed = 1; seed <= 4; ++seed) {
		generator_spec s;
		s.family = "random-gnp";
		s.seed = seed;
		s.n = 10;
		s.p = 0.3;
		push("gnp", s, seed <= 2 ? 1 : 2, 4);
	}
	return out;
}

report steiner_suite() {
	report r;
	std::mt19937_64 rng(20240611);
	for(int i = 0; i < 100; ++i) {
		report_row row;
		row.id = i;
		row.name = "steiner";
		const int n = 4 + static_cast<int>(draw_below(rng, 7));
		const std::uint64_t seed = rng();
		auto g = random_gnp(n, 0.35, seed);
		const int r_count = 1 + static_cast<int>(draw_below(rng, std::min(4, n)));
		std::vector<vertex> all(n);
		for(int v = 0; v < n; ++v)
			all[v] = v;
		for(int j = 0; j < r_count; ++j)
			std::swap(all[j], all[j + draw_below(rng, n - j)]);
		vertex_set terms(std::vector<vertex>(all.begin(), all.begin() + r_count));
		row.instance = "gnp(n=" + std::to_string(n) + ",terminals=" + std::to_string(r_count) + ")";
		row.n = n;
		row.m = g.num_edges();
		auto dp = compute_steiner_tree(g, terms);
		auto brute = brute_steiner(g, terms);
		bool agree = dp.has_value() == brute.has_value() &&
		             (!dp || (dp->cost() == brute->cost() && validate_steiner_tree(g, *dp).empty()));
		add(row, "steiner-dp-vs-brute", agree);
		r.rows.push_back(row);
	}
	return r;
}

} // namespace

std::vector<std::string> suite_names() {
	return {"safeness-small", "paper-constants", "steiner-oracle"};
}

report run_named_suite(const std::string &name) {
	if(name == "safeness-small")
		return run_suite(small_instances(constant_profile::custom));
	if(name == "paper-constants")
		return run_suite(small_instances(constant_profile::paper));
	if(name == "steiner-oracle")
		return steiner_suite();
	throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<std::string> report_columns() {
	return {"id",  "name",  "instance", "n",      "m",      "eta",     "k",      "profile",
	        "mode", "n_reduced", "H", "M", "N", "rule2", "rule3", "rule4", "opt_g", "opt_reduced",
	        "lifted_value", "lifted_kind", "ratio", "bound", "status", "failed"};
}

namespace {

std::vector<std::string> cells(const report_row &r) {
	return {std::to_string(r.id), r.name, r.instance, std::to_string(r.n), std::to_string(r.m),
	        std::to_string(r.eta), std::to_string(r.k), r.profile, r.mode, std::to_string(r.n_reduced),
	        std::to_string(r.h), std::to_string(r.marked), std::to_string(r.connectors),
	        std::to_string(r.rule2), std::to_string(r.rule3), std::to_string(r.rule4), r.opt_g,
	        r.opt_reduced, r.lifted_value, r.lifted_kind, r.ratio, r.bound, r.ok() ? "pass" : "FAIL",
	        r.failed()};
}

std::string csv_cell(const std::string &s) {
	if(s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for(char c : s) {
		if(c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

} // namespace

std::string emit_report(const report &r, const std::string &format) {
	const auto head = report_columns();
	std::vector<std::vector<std::string>> table{head};
	for(const auto &row : r.rows)
		table.push_back(cells(row));
	std::string out;
	if(format == "csv") {
		for(const auto &line : table) {
			for(std::size_t i = 0; i < line.size(); ++i)
				out += (i ? "," : "") + csv_cell(line[i]);
			out += '\n';
		}
		return out;
	}
	if(format != "table")
		throw std::invalid_argument("unknown report format '" + format + "'");
	std::vector<std::size_t> width(head.size(), 0);
	for(const auto &line : table)
		for(std::size_t i = 0; i < line.size(); ++i)
			width[i] = std::max(width[i], line[i].size());
	for(const auto &line : table) {
		std::string text;
		for(std::size_t i = 0; i < line.size(); ++i) {
			text += line[i];
			if(i + 1 < line.size())
				text += std::string(width[i] - line[i].size() + 2, ' ');
		}
		while(!text.empty() && text.back() == ' ')
			text.pop_back();
		out += text + '\n';
	}
	return out;
}

} // namespace ctd
