#include "ctd/decomposer.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <omp.h>

#include "ctd/flow_steiner.hpp"

namespace ctd {

namespace {

using wide_int = __int128;
constexpr wide_int saturate_at = LLONG_MAX;

long long clamp_ll(wide_int v) {
	return v >= saturate_at ? LLONG_MAX : static_cast<long long>(v);
}

wide_int sat_mul(wide_int a, wide_int b) {
	if(a == 0 || b == 0)
		return 0;
	if(a > saturate_at / b)
		return saturate_at;
	return a * b;
}

wide_int ceil_div(wide_int a, wide_int b) {
	return (a + b - 1) / b;
}

wide_int pow2_sat(long long e) {
	if(e >= 62)
		return saturate_at;
	return wide_int{1} << e;
}

rational reduce(std::int64_t num, std::int64_t den) {
	if(den == 0)
		throw std::invalid_argument("rational: zero denominator");
	auto g = std::gcd(num, den);
	if(g == 0)
		g = 1;
	return {num / g, den / g};
}

} // namespace

rational rational::parse(std::string_view text) {
	auto bad = [&] { return std::invalid_argument("cannot parse rational '" + std::string(text) + "'"); };
	auto to_int = [&](std::string_view s) {
		std::int64_t v = 0;
		auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
		if(ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0)
			throw bad();
		return v;
	};
	if(auto slash = text.find('/'); slash != std::string_view::npos)
		return reduce(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
	if(auto dot = text.find('.'); dot != std::string_view::npos) {
		auto whole = text.substr(0, dot);
		auto frac = text.substr(dot + 1);
		if(frac.size() > 15)
			throw bad();
		std::int64_t den = 1;
		for(std::size_t i = 0; i < frac.size(); ++i)
			den *= 10;
		std::int64_t w = whole.empty() ? 0 : to_int(whole);
		std::int64_t f = frac.empty() ? 0 : to_int(frac);
		return reduce(w * den + f, den);
	}
	return reduce(to_int(text), 1);
}

std::string rational::str() const {
	if(den == 1)
		return std::to_string(num);
	return std::to_string(num) + "/" + std::to_string(den);
}

long long params::connector_budget() const {
	wide_int num = sat_mul(k, delta.den + delta.num);
	return clamp_ll(num / delta.den);
}

double params::effective_delta() const {
	const double two_eta = std::ldexp(1.0, eta);
	double a = eta * two_eta / static_cast<double>(d);
	double b = (static_cast<double>(d) + 2.0 * eta) * two_eta / (static_cast<double>(lambda) + 1.0);
	double c = t_log2 >= 1 ? 1.0 / static_cast<double>(t_log2) : std::numeric_limits<double>::infinity();
	return std::max({a, b, c});
}

std::string params::describe() const {
	std::ostringstream out;
	out << "eta=" << eta << " eps=" << eps.str() << " k=" << k << " delta=" << delta.str()
	    << " d=" << d << " lambda=" << lambda << " t=" << t
	    << " profile=" << (profile == constant_profile::paper ? "paper" : "custom");
	if(guarantee_void())
		out << " (approximation guarantee void, effective delta " << effective_delta() << ")";
	return out.str();
}

params derive_params(int eta, rational eps, long long k, constant_profile profile,
                     const custom_constants &custom) {
	if(eta < 1 || eta > 30)
		throw std::invalid_argument("eta must be in [1, 30]");
	if(k < 0)
		throw std::invalid_argument("k must be non-negative");
	if(eps.num <= 0 || eps.den <= 0)
		throw std::invalid_argument("eps must be positive");
	if(profile == constant_profile::paper && eps.num > eps.den)
		throw std::invalid_argument("eps must lie in (0, 1] under the paper profile");
	params p;
	p.eta = eta;
	p.eps = eps;
	p.k = k;
	p.delta = reduce(eps.num, eps.den * 10);
	p.profile = profile;
	p.size_gate = profile == constant_profile::paper;
	if(profile == constant_profile::paper) {
		// 1/delta = den/num
		const wide_int inv_num = p.delta.den;
		const wide_int inv_den = p.delta.num;
		wide_int d = ceil_div(sat_mul(sat_mul(pow2_sat(eta + 3), eta), inv_num), inv_den);
		p.d = clamp_ll(d);
		wide_int lam = sat_mul(pow2_sat(eta), ceil_div(sat_mul(d + 2 * eta, inv_num), inv_den));
		p.lambda = clamp_ll(lam);
		p.t_log2 = clamp_ll(ceil_div(inv_num, inv_den));
		p.t = clamp_ll(pow2_sat(p.t_log2));
	} else {
		if(custom.d < 1 || custom.lambda < 0 || custom.t < 1)
			throw std::invalid_argument("custom constants need d >= 1, lambda >= 0, t >= 1");
		p.d = custom.d;
		p.lambda = custom.lambda;
		p.t = custom.t;
		p.t_log2 = 0;
		for(long long x = custom.t; x > 1; x >>= 1)
			++p.t_log2;
	}
	return p;
}

obstruction_cover extract_obstructions(const graph &g, int eta, long long max_obstructions) {
	td_solver solver(g);
	obstruction_cover out;
	for(;;) {
		if(max_obstructions >= 0 && static_cast<long long>(out.obstructions.size()) >= max_obstructions)
			break;
		auto comps = connected_components(g, all_vertices(g).minus(out.X));
		const vertex_set *bad = nullptr;
		for(const auto &c : comps)
			if(!solver.at_most(c, eta)) {
				bad = &c;
				break;
			}
		if(!bad)
			break;
		vertex_set obstruction = *bad;
		for(vertex v : *bad) {
			vertex_set smaller = obstruction;
			smaller.erase(v);
			if(!solver.at_most(smaller, eta))
				obstruction = std::move(smaller);
		}
		out.X = out.X.unite(obstruction);
		out.obstructions.push_back(std::move(obstruction));
	}
	return out;
}

vertex_set approx_td_deletion(const graph &g, int eta) {
	return extract_obstructions(g, eta).X;
}

std::string partition::dump() const {
	auto line = [](const char *tag, const vertex_set &s) {
		std::string out = tag;
		out += ':';
		for(vertex v : s)
			out += ' ' + std::to_string(v);
		return out + '\n';
	};
	return line("X", X) + line("Z", Z) + line("R", R);
}

namespace detail {

std::optional<partition> decompose(const graph &g, const params &p, bool parallel) {
	if(!is_connected(g))
		throw std::invalid_argument("decompose: graph must be connected");
	auto cover = extract_obstructions(g, p.eta, p.k + 1);
	if(static_cast<long long>(cover.obstructions.size()) > p.k)
		return std::nullopt;

	partition part;
	part.X = cover.X;
	part.obstructions = std::move(cover.obstructions);
	part.rest = remove_vertices(g, part.X);
	auto forest = build_decomposition(part.rest.g, p.eta);
	if(!forest)
		throw std::logic_error("decompose: g - X exceeds the treedepth bound");
	part.forest = std::move(*forest);

	std::vector<std::pair<vertex, vertex>> pairs;
	for(std::size_t i = 0; i < part.X.size(); ++i)
		for(std::size_t j = i + 1; j < part.X.size(); ++j)
			if(!g.has_edge(part.X[i], part.X[j]))
				pairs.emplace_back(part.X[i], part.X[j]);

	const vertex_set outside = all_vertices(g).minus(part.X);
	const long long limit = p.k + p.eta;
	std::vector<vertex_set> added(pairs.size());
	auto one_pair = [&](std::size_t idx) {
		auto [x, y] = pairs[idx];
		vertex_set keep = outside;
		keep.insert(x);
		keep.insert(y);
		auto sub = induced_subgraph(g, keep);
		auto map = sub.from_parent(g.num_vertices());
		auto cut = sub.lift(min_vertex_cut(sub.g, map[x], map[y]));
		if(static_cast<long long>(cut.size()) > limit)
			return;
		auto in_rest = part.rest.restrict(cut, g.num_vertices());
		added[idx] = part.rest.lift(upward_closure(part.forest, in_rest));
	};
	const auto count = static_cast<std::int64_t>(pairs.size());
	if(parallel) {
#pragma omp parallel for schedule(dynamic, 4)
		for(std::int64_t i = 0; i < count; ++i)
			one_pair(static_cast<std::size_t>(i));
	} else {
		for(std::int64_t i = 0; i < count; ++i)
			one_pair(static_cast<std::size_t>(i));
	}
	for(const auto &z : added)
		part.Z = part.Z.unite(z);
	part.R = outside.minus(part.Z);
	return part;
}

} // namespace detail

std::optional<partition> decompose(const graph &g, const params &p) {
	return detail::decompose(g, p, true);
}

bool partition_report::ok() const {
	return std::all_of(checks.begin(), checks.end(), [](const check_result &c) { return c.pass; });
}

const check_result *partition_report::find(std::string_view name) const {
	for(const auto &c : checks)
		if(c.name == name)
			return &c;
	return nullptr;
}

partition_report verify_partition(const graph &g, const params &p, const partition &part) {
	partition_report rep;
	const auto all = all_vertices(g);
	{
		check_result c{"cover", true, {}};
		bool disjoint = !part.X.intersects(part.Z) && !part.X.intersects(part.R) &&
		                !part.Z.intersects(part.R);
		if(!disjoint || part.X.unite(part.Z).unite(part.R) != all) {
			c.pass = false;
			c.detail = "X, Z, R do not partition V";
		}
		rep.checks.push_back(c);
	}
	{
		check_result c{"deletion-set", true, {}};
		if(!td_at_most(remove_vertices(g, part.X).g, p.eta)) {
			c.pass = false;
			c.detail = "td(g - X) exceeds eta";
		}
		rep.checks.push_back(c);
	}
	{
		check_result c{"separator-size", true, {}};
		long double bound = static_cast<long double>(p.eta) * (p.k + p.eta) * part.X.size() * part.X.size();
		if(static_cast<long double>(part.Z.size()) > bound) {
			c.pass = false;
			c.detail = "|Z| = " + std::to_string(part.Z.size()) + " exceeds the pair-count bound";
		}
		rep.checks.push_back(c);
	}
	{
		check_result c{"attachment", true, {}};
		for(const auto &comp : connected_components(g, part.R)) {
			auto hits = neighborhood(g, comp).intersect(part.Z);
			if(static_cast<long long>(hits.size()) > p.eta) {
				c.pass = false;
				c.detail = "component at " + std::to_string(comp.front()) + " has " +
				           std::to_string(hits.size()) + " Z-neighbours";
				break;
			}
		}
		rep.checks.push_back(c);
	}
	return rep;
}

} // namespace ctd
