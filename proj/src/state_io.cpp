#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctd/kernel.hpp"

namespace ctd {

namespace {

using json = nlohmann::ordered_json;

json to_json(const vertex_set &s) {
	return json(s.ids());
}

vertex_set set_from(const json &j) {
	return vertex_set(j.get<std::vector<vertex>>());
}

json to_json(const graph &g) {
	json edges = json::array();
	for(auto [u, v] : g.edges())
		edges.push_back({u, v});
	return {{"n", g.num_vertices()}, {"edges", edges}, {"labels", g.labels()}};
}

graph graph_from(const json &j) {
	std::vector<std::pair<vertex, vertex>> edges;
	for(const auto &e : j.at("edges"))
		edges.emplace_back(e.at(0).get<vertex>(), e.at(1).get<vertex>());
	return graph(j.at("n").get<int>(), edges, j.at("labels").get<std::vector<std::int64_t>>());
}

json to_json(const params &p) {
	return {{"eta", p.eta},
	        {"eps", p.eps.str()},
	        {"k", p.k},
	        {"delta", p.delta.str()},
	        {"d", p.d},
	        {"lambda", p.lambda},
	        {"t", p.t},
	        {"t_log2", p.t_log2},
	        {"profile", p.profile == constant_profile::paper ? "paper" : "custom"},
	        {"size_gate", p.size_gate}};
}

params params_from(const json &j) {
	params p;
	p.eta = j.at("eta").get<int>();
	p.eps = rational::parse(j.at("eps").get<std::string>());
	p.k = j.at("k").get<long long>();
	p.delta = rational::parse(j.at("delta").get<std::string>());
	p.d = j.at("d").get<long long>();
	p.lambda = j.at("lambda").get<long long>();
	p.t = j.at("t").get<long long>();
	p.t_log2 = j.at("t_log2").get<long long>();
	auto prof = j.at("profile").get<std::string>();
	if(prof != "paper" && prof != "custom")
		throw std::invalid_argument("unknown profile '" + prof + "'");
	p.profile = prof == "paper" ? constant_profile::paper : constant_profile::custom;
	p.size_gate = j.at("size_gate").get<bool>();
	return p;
}

} // namespace

std::string state_to_json(const kernel_state &s) {
	json gadgets = json::array();
	for(const auto &g : s.gadgets)
		gadgets.push_back({{"anchor", g.anchor}, {"interior", to_json(g.interior)}});
	json batches = json::array();
	for(const auto &b : s.forced_batches)
		batches.push_back(to_json(b));
	json obstructions = json::array();
	for(const auto &o : s.obstructions)
		obstructions.push_back(to_json(o));
	json trace = json::array();
	for(const auto &t : s.trace)
		trace.push_back({{"rule", t.rule}, {"detail", t.detail}});
	json out = {
	    {"format", "ctd-kernel-state/1"},
	    {"mode", to_string(s.mode)},
	    {"params", to_json(s.p)},
	    {"k_reduced", s.k_reduced},
	    {"original", to_json(s.original)},
	    {"base_size", s.base_size},
	    {"g1", to_json(s.g1)},
	    {"X", to_json(s.X)},
	    {"Z", to_json(s.Z)},
	    {"R", to_json(s.R)},
	    {"obstructions", obstructions},
	    {"H", to_json(s.H)},
	    {"M", to_json(s.M)},
	    {"N", to_json(s.N)},
	    {"gadgets", gadgets},
	    {"forced_batches", batches},
	    {"rule3_applications", s.rule3_applications},
	    {"rule4_applications", s.rule4_applications},
	    {"reduced", to_json(s.reduced)},
	    {"reduced_to_g1", s.reduced_to_g1},
	    {"back_map", s.reduced_to_original()},
	    {"sentinel", to_json(s.sentinel)},
	    {"trace", trace},
	};
	return out.dump(1, '\t') + "\n";
}

kernel_state state_from_json(std::string_view text) {
	json j;
	try {
		j = json::parse(text);
	} catch(const json::parse_error &e) {
		throw std::runtime_error(std::string("state.json: ") + e.what());
	}
	try {
		if(j.at("format").get<std::string>() != "ctd-kernel-state/1")
			throw std::runtime_error("state.json: unsupported format");
		kernel_state s;
		s.mode = parse_kernel_mode(j.at("mode").get<std::string>());
		s.p = params_from(j.at("params"));
		s.k_reduced = j.at("k_reduced").get<long long>();
		s.original = graph_from(j.at("original"));
		s.base_size = j.at("base_size").get<int>();
		s.g1 = graph_from(j.at("g1"));
		s.X = set_from(j.at("X"));
		s.Z = set_from(j.at("Z"));
		s.R = set_from(j.at("R"));
		for(const auto &o : j.at("obstructions"))
			s.obstructions.push_back(set_from(o));
		s.H = set_from(j.at("H"));
		s.M = set_from(j.at("M"));
		s.N = set_from(j.at("N"));
		for(const auto &g : j.at("gadgets"))
			s.gadgets.push_back({g.at("anchor").get<vertex>(), set_from(g.at("interior"))});
		for(const auto &b : j.at("forced_batches"))
			s.forced_batches.push_back(set_from(b));
		s.rule3_applications = j.at("rule3_applications").get<int>();
		s.rule4_applications = j.at("rule4_applications").get<int>();
		s.reduced = graph_from(j.at("reduced"));
		s.reduced_to_g1 = j.at("reduced_to_g1").get<std::vector<vertex>>();
		s.sentinel = set_from(j.at("sentinel"));
		for(const auto &t : j.at("trace"))
			s.trace.push_back({t.at("rule").get<std::string>(), t.at("detail").get<std::string>()});
		return s;
	} catch(const json::exception &e) {
		throw std::runtime_error(std::string("state.json: ") + e.what());
	}
}

void save_state(const kernel_state &s, const std::string &dir) {
	std::filesystem::create_directories(dir);
	write_graph_file(s.reduced, (std::filesystem::path(dir) / "reduced.gr").string());
	std::ofstream out(std::filesystem::path(dir) / "state.json", std::ios::binary);
	if(!out)
		throw std::runtime_error("cannot write " + dir + "/state.json");
	out << state_to_json(s);
}

kernel_state load_state(const std::string &dir) {
	auto path = std::filesystem::path(dir) / "state.json";
	std::ifstream in(path, std::ios::binary);
	if(!in)
		throw std::runtime_error("cannot read " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	return state_from_json(buf.str());
}

} // namespace ctd
