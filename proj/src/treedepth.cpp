#include "ctd/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <variant>

namespace ctd {

int td_decomposition::max_depth() const {
	int best = 0;
	for(int d : depth)
		best = std::max(best, d);
	return best;
}

bool td_decomposition::is_ancestor(vertex a, vertex b) const {
	for(vertex p = parent[b]; p >= 0; p = parent[p])
		if(p == a)
			return true;
	return false;
}

namespace {

template <class Bits>
struct ops;

template <>
struct ops<std::uint64_t> {
	using B = std::uint64_t;
	static B empty(int) { return 0; }
	static void set(B &b, int i) { b |= B{1} << i; }
	static void reset(B &b, int i) { b &= ~(B{1} << i); }
	static bool test(const B &b, int i) { return (b >> i) & 1u; }
	static int count(const B &b) { return std::popcount(b); }
	static bool any(const B &b) { return b != 0; }
	static B band(const B &a, const B &b) { return a & b; }
	static B bor(const B &a, const B &b) { return a | b; }
	static B bandnot(const B &a, const B &b) { return a & ~b; }
	static int lowest(const B &b) { return b ? std::countr_zero(b) : -1; }
	template <class F>
	static void each(B b, F &&f) {
		while(b) {
			int i = std::countr_zero(b);
			b &= b - 1;
			f(i);
		}
	}
	struct hash {
		std::size_t operator()(B b) const { return static_cast<std::size_t>(b * 0x9E3779B97F4A7C15ull); }
	};
};

struct wide {
	std::vector<std::uint64_t> w;
	bool operator==(const wide &) const = default;
};

template <>
struct ops<wide> {
	using B = wide;
	static B empty(int n) { return B{std::vector<std::uint64_t>((n + 63) / 64, 0)}; }
	static void set(B &b, int i) { b.w[i >> 6] |= std::uint64_t{1} << (i & 63); }
	static void reset(B &b, int i) { b.w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
	static bool test(const B &b, int i) { return (b.w[i >> 6] >> (i & 63)) & 1u; }
	static int count(const B &b) {
		int c = 0;
		for(auto x : b.w)
			c += std::popcount(x);
		return c;
	}
	static bool any(const B &b) {
		for(auto x : b.w)
			if(x)
				return true;
		return false;
	}
	static B band(const B &a, const B &b) {
		B out = a;
		for(std::size_t i = 0; i < out.w.size(); ++i)
			out.w[i] &= b.w[i];
		return out;
	}
	static B bor(const B &a, const B &b) {
		B out = a;
		for(std::size_t i = 0; i < out.w.size(); ++i)
			out.w[i] |= b.w[i];
		return out;
	}
	static B bandnot(const B &a, const B &b) {
		B out = a;
		for(std::size_t i = 0; i < out.w.size(); ++i)
			out.w[i] &= ~b.w[i];
		return out;
	}
	static int lowest(const B &b) {
		for(std::size_t i = 0; i < b.w.size(); ++i)
			if(b.w[i])
				return static_cast<int>(i * 64) + std::countr_zero(b.w[i]);
		return -1;
	}
	template <class F>
	static void each(const B &b, F &&f) {
		for(std::size_t i = 0; i < b.w.size(); ++i) {
			auto x = b.w[i];
			while(x) {
				int j = std::countr_zero(x);
				x &= x - 1;
				f(static_cast<int>(i * 64) + j);
			}
		}
	}
	struct hash {
		std::size_t operator()(const B &b) const {
			std::size_t h = 0xcbf29ce484222325ull;
			for(auto x : b.w)
				h = (h ^ static_cast<std::size_t>(x * 0x9E3779B97F4A7C15ull)) * 0x100000001b3ull;
			return h;
		}
	};
};

template <class Bits>
class engine {
	using O = ops<Bits>;

public:
	explicit engine(const graph &g) : g_(g), n_(g.num_vertices()) {
		nbr_.reserve(n_);
		for(vertex v = 0; v < n_; ++v) {
			Bits b = O::empty(n_);
			for(vertex w : g.neighbors(v))
				O::set(b, w);
			nbr_.push_back(std::move(b));
		}
	}

	const graph &host() const { return g_; }
	std::size_t memo_size() const { return memo_.size(); }

	Bits full() const {
		Bits b = O::empty(n_);
		for(int v = 0; v < n_; ++v)
			O::set(b, v);
		return b;
	}

	Bits from(const vertex_set &s) const {
		check_ids(g_, s);
		Bits b = O::empty(n_);
		for(vertex v : s)
			O::set(b, v);
		return b;
	}

	Bits without(std::span<const vertex> removed) const {
		Bits b = full();
		for(vertex v : removed)
			O::reset(b, v);
		return b;
	}

	bool ok(Bits s, int bound) {
		while(O::any(s)) {
			Bits comp = component_of(s, O::lowest(s));
			if(!ok_connected(comp, bound))
				return false;
			s = O::bandnot(s, comp);
		}
		return true;
	}

	int td(Bits s) {
		int best = 0;
		while(O::any(s)) {
			Bits comp = component_of(s, O::lowest(s));
			if(!ok_connected(comp, best))
				best = td_connected(comp, best + 1);
			s = O::bandnot(s, comp);
		}
		return best;
	}

	std::optional<td_decomposition> decompose(Bits s, int bound) {
		td_decomposition d;
		d.parent.assign(n_, -1);
		d.depth.assign(n_, 0);
		std::vector<Bits> comps;
		while(O::any(s)) {
			Bits comp = component_of(s, O::lowest(s));
			if(!ok_connected(comp, bound))
				return std::nullopt;
			comps.push_back(comp);
			s = O::bandnot(s, comp);
		}
		for(const auto &comp : comps)
			build(d, comp, -1, 1, td_connected(comp, 1));
		return d;
	}

private:
	struct entry {
		int known_false = 0;       // td > known_false
		int known_true = INT_MAX;  // td <= known_true
	};

	Bits component_of(const Bits &within, int start) const {
		Bits reached = O::empty(n_);
		O::set(reached, start);
		Bits frontier = reached;
		while(O::any(frontier)) {
			Bits next = O::empty(n_);
			O::each(frontier, [&](int v) { next = O::bor(next, nbr_[v]); });
			next = O::bandnot(O::band(next, within), reached);
			reached = O::bor(reached, next);
			frontier = std::move(next);
		}
		return reached;
	}

	int td_connected(const Bits &c, int from) {
		int b = std::max(from, 1);
		if(auto it = memo_.find(c); it != memo_.end())
			b = std::max(b, it->second.known_false + 1);
		while(!ok_connected(c, b))
			++b;
		return b;
	}

	void remember(const Bits &c, int bound, bool result) {
		auto &e = memo_[c];
		if(result)
			e.known_true = std::min(e.known_true, bound);
		else
			e.known_false = std::max(e.known_false, bound);
	}

	bool ok_connected(const Bits &c, int bound) {
		if(bound <= 0)
			return false;
		const int cnt = O::count(c);
		if(cnt <= bound)
			return true;
		if(bound == 1)
			return false;
		if(auto it = memo_.find(c); it != memo_.end()) {
			if(bound >= it->second.known_true)
				return true;
			if(bound <= it->second.known_false)
				return false;
		}
		// A depth-b elimination forest on cnt >= b vertices has at most
		// (b-1)cnt - b(b-1)/2 ancestor/descendant pairs.
		long long twice_m = 0;
		std::vector<std::pair<int, int>> order;
		order.reserve(cnt);
		O::each(c, [&](int v) {
			int deg = O::count(O::band(nbr_[v], c));
			twice_m += deg;
			order.emplace_back(-deg, v);
		});
		const long long b = bound;
		if(twice_m / 2 > (b - 1) * cnt - b * (b - 1) / 2) {
			remember(c, bound, false);
			return false;
		}
		std::sort(order.begin(), order.end());
		bool result = false;
		for(auto [neg_deg, v] : order) {
			Bits rest = c;
			O::reset(rest, v);
			if(ok(rest, bound - 1)) {
				result = true;
				break;
			}
		}
		remember(c, bound, result);
		return result;
	}

	void build(td_decomposition &d, const Bits &c, vertex parent, int depth, int td_c) {
		int root = -1;
		if(O::count(c) == 1) {
			root = O::lowest(c);
		} else {
			O::each(c, [&](int v) {
				if(root >= 0)
					return;
				Bits rest = c;
				O::reset(rest, v);
				if(ok(rest, td_c - 1))
					root = v;
			});
		}
		d.parent[root] = parent;
		d.depth[root] = depth;
		Bits rest = c;
		O::reset(rest, root);
		while(O::any(rest)) {
			Bits comp = component_of(rest, O::lowest(rest));
			build(d, comp, root, depth + 1, td_connected(comp, 1));
			rest = O::bandnot(rest, comp);
		}
	}

	const graph &g_;
	int n_;
	std::vector<Bits> nbr_;
	std::unordered_map<Bits, entry, typename O::hash> memo_;
};

} // namespace

struct td_solver::impl {
	graph g;
	std::variant<engine<std::uint64_t>, engine<wide>> e;

	explicit impl(const graph &src) : g(src), e(make(g)) {}

	static std::variant<engine<std::uint64_t>, engine<wide>> make(const graph &g) {
		if(g.num_vertices() <= 64)
			return std::variant<engine<std::uint64_t>, engine<wide>>(std::in_place_index<0>, g);
		return std::variant<engine<std::uint64_t>, engine<wide>>(std::in_place_index<1>, g);
	}
};

// The engine refers to the host graph, so the solver owns a copy of it.
td_solver::td_solver(const graph &g) : impl_(std::make_unique<impl>(g)) {}

td_solver::~td_solver() = default;
td_solver::td_solver(td_solver &&) noexcept = default;
td_solver &td_solver::operator=(td_solver &&) noexcept = default;

const graph &td_solver::host() const {
	return impl_->g;
}

bool td_solver::at_most(const vertex_set &s, int bound) {
	return std::visit([&](auto &e) { return e.ok(e.from(s), bound); }, impl_->e);
}

bool td_solver::at_most(int bound) {
	return std::visit([&](auto &e) { return e.ok(e.full(), bound); }, impl_->e);
}

bool td_solver::at_most_without(std::span<const vertex> removed, int bound) {
	return std::visit([&](auto &e) { return e.ok(e.without(removed), bound); }, impl_->e);
}

int td_solver::treedepth(const vertex_set &s) {
	return std::visit([&](auto &e) { return e.td(e.from(s)); }, impl_->e);
}

int td_solver::treedepth() {
	return std::visit([&](auto &e) { return e.td(e.full()); }, impl_->e);
}

std::optional<td_decomposition> td_solver::decompose(const vertex_set &s, int bound) {
	return std::visit([&](auto &e) { return e.decompose(e.from(s), bound); }, impl_->e);
}

std::size_t td_solver::memo_size() const {
	return std::visit([](const auto &e) { return e.memo_size(); }, impl_->e);
}

int treedepth(const graph &g) {
	return td_solver(g).treedepth();
}

bool td_at_most(const graph &g, int eta) {
	return td_solver(g).at_most(eta);
}

std::optional<td_decomposition> build_decomposition(const graph &g, int eta) {
	return td_solver(g).decompose(all_vertices(g), eta);
}

std::string validate_decomposition(const graph &g, const td_decomposition &d) {
	const int n = g.num_vertices();
	if(d.size() != n || static_cast<int>(d.depth.size()) != n)
		return "decomposition size does not match graph";
	for(vertex v = 0; v < n; ++v) {
		vertex p = d.parent[v];
		if(p < -1 || p >= n)
			return "parent out of range at vertex " + std::to_string(v);
		if(p == -1 && d.depth[v] != 1)
			return "root " + std::to_string(v) + " does not have depth 1";
		if(p >= 0 && d.depth[v] != d.depth[p] + 1)
			return "depth mismatch at vertex " + std::to_string(v);
	}
	// Depth consistency along parent links rules out cycles.
	for(auto [u, v] : g.edges())
		if(!d.is_ancestor(u, v) && !d.is_ancestor(v, u))
			return "edge " + std::to_string(u) + "-" + std::to_string(v) + " joins incomparable vertices";
	return {};
}

vertex_set upward_closure(const td_decomposition &d, const vertex_set &s) {
	std::vector<vertex> out;
	for(vertex v : s) {
		if(v < 0 || v >= d.size())
			throw std::out_of_range("upward_closure: vertex id out of range");
		for(vertex u = v; u >= 0; u = d.parent[u])
			out.push_back(u);
	}
	return vertex_set(std::move(out));
}

bool check_diameter_bound(const graph &g, int eta) {
	if(!is_connected(g))
		throw std::invalid_argument("check_diameter_bound: graph is disconnected");
	if(!td_at_most(g, eta))
		throw std::invalid_argument("check_diameter_bound: treedepth exceeds eta");
	if(eta >= 31)
		return true;
	return diameter(g) <= (1 << eta);
}

std::string write_decomposition(const td_decomposition &d) {
	std::string out;
	for(vertex v = 0; v < d.size(); ++v)
		out += "v " + std::to_string(v) + " " + std::to_string(d.parent[v]) + " " +
		       std::to_string(d.depth[v]) + "\n";
	return out;
}

td_decomposition read_decomposition(std::string_view text) {
	std::istringstream in{std::string(text)};
	std::string line;
	std::vector<std::tuple<int, int, int>> rows;
	int line_no = 0;
	while(std::getline(in, line)) {
		++line_no;
		if(line.empty() || line[0] == '#')
			continue;
		std::istringstream ls(line);
		std::string tag;
		int v, p, dep;
		if(!(ls >> tag >> v >> p >> dep) || tag != "v")
			throw graph_format_error(line_no, "expected 'v <id> <parent> <depth>'");
		rows.emplace_back(v, p, dep);
	}
	td_decomposition d;
	d.parent.assign(rows.size(), -1);
	d.depth.assign(rows.size(), 0);
	for(auto [v, p, dep] : rows) {
		if(v < 0 || v >= static_cast<int>(rows.size()))
			throw graph_format_error(0, "vertex id out of range in decomposition");
		d.parent[v] = p;
		d.depth[v] = dep;
	}
	return d;
}

} // namespace ctd
