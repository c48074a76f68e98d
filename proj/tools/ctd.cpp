// ctd: command-line front end for the kernelization library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "ctd/harness.hpp"
#include "ctd/kernel.hpp"
#include "ctd/lifter.hpp"
#include "ctd/oracle.hpp"
#include "ctd/treedepth.hpp"

namespace {

std::string slurp(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if(!in)
		throw std::runtime_error("cannot read " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

void spill(const std::string &path, const std::string &text) {
	if(path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	auto parent = std::filesystem::path(path).parent_path();
	if(!parent.empty())
		std::filesystem::create_directories(parent);
	std::ofstream out(path, std::ios::binary);
	if(!out)
		throw std::runtime_error("cannot write " + path);
	out << text;
}

std::string default_out(const std::string &leaf) {
	const char *dir = std::getenv("CTD_OUT_DIR");
	return (std::filesystem::path(dir && *dir ? dir : "ctd-out") / leaf).string();
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Approximate kernelization for connected treedepth deletion"};
	app.require_subcommand(1);

	// gen
	ctd::generator_spec spec;
	std::string gen_out;
	auto *gen = app.add_subcommand("gen", "Generate an instance");
	gen->add_option("--family", spec.family, "random-gnp | grid | broom | subdivided-star | component-soup")
	    ->check(CLI::IsMember({"random-gnp", "grid", "broom", "subdivided-star", "component-soup"}));
	gen->add_option("--seed", spec.seed);
	gen->add_option("--n", spec.n);
	gen->add_option("--p", spec.p);
	gen->add_option("--rows", spec.rows);
	gen->add_option("--cols", spec.cols);
	gen->add_option("--eta", spec.eta);
	gen->add_option("--branches", spec.branches);
	gen->add_option("--depth", spec.depth);
	gen->add_option("--classes", spec.classes);
	gen->add_option("--per-class", spec.per_class);
	gen->add_option("--core", spec.core);
	gen->add_flag("--big", spec.big);
	gen->add_option("--out", gen_out, "output file (default stdout)");

	// kernelize
	std::string graph_path, eps = "1", profile = "paper", kern_out;
	int eta = 1;
	long long k = 0;
	ctd::custom_constants custom;
	bool force_gate = false, skip_gate = false;
	auto *kern = app.add_subcommand("kernelize", "Reduce an instance");
	kern->add_option("--graph", graph_path)->required();
	kern->add_option("--eta", eta)->required();
	kern->add_option("--eps", eps, "rational, e.g. 1/2 or 0.5");
	kern->add_option("--k", k)->required();
	kern->add_option("--profile", profile)->check(CLI::IsMember({"paper", "custom"}));
	kern->add_option("--d", custom.d);
	kern->add_option("--lambda", custom.lambda);
	kern->add_option("--t", custom.t);
	kern->add_flag("--size-gate", force_gate, "apply the size gate under the custom profile");
	kern->add_flag("--no-size-gate", skip_gate, "skip the size gate under the paper profile");
	kern->add_option("--out", kern_out, "output directory (default $CTD_OUT_DIR/kernel)");

	// lift
	std::string state_dir, solution_path, lift_out;
	auto *lift = app.add_subcommand("lift", "Lift a solution of the reduced instance");
	lift->add_option("--state", state_dir)->required();
	lift->add_option("--solution", solution_path)->required();
	lift->add_option("--out", lift_out, "output file (default $CTD_OUT_DIR/lifted.txt)");

	// oracle
	bool connected = false, enumerate = false;
	auto *orc = app.add_subcommand("oracle", "Exact optimum by enumeration");
	orc->add_option("--graph", graph_path)->required();
	orc->add_option("--k", k)->required();
	orc->add_option("--eta", eta)->required();
	orc->add_flag("--connected", connected);
	orc->add_flag("--enumerate", enumerate);

	// verify
	auto *ver = app.add_subcommand("verify", "Check a connected deletion set");
	ver->add_option("--graph", graph_path)->required();
	ver->add_option("--solution", solution_path)->required();
	ver->add_option("--eta", eta)->required();
	ver->add_option("--k", k, "also require |S| <= k")->default_val(-1);

	// bench
	std::string suite = "all", format = "table", bench_out;
	int threads = 0;
	auto *bench = app.add_subcommand("bench", "Run experiment suites");
	bench->add_option("--suite", suite, "safeness-small | paper-constants | steiner-oracle | all");
	bench->add_option("--format", format)->check(CLI::IsMember({"table", "csv"}));
	bench->add_option("--out", bench_out, "report file (default stdout)");
	bench->add_option("--threads", threads, "OpenMP threads (0: runtime default)");

	CLI11_PARSE(app, argc, argv);

	try {
		if(*gen) {
			auto g = ctd::generate(spec);
			spill(gen_out, "# " + spec.describe() + "\n" + ctd::write_graph(g));
			return 0;
		}
		if(*kern) {
			auto g = ctd::read_graph_file(graph_path);
			auto prof = profile == "paper" ? ctd::constant_profile::paper : ctd::constant_profile::custom;
			auto p = ctd::derive_params(eta, ctd::rational::parse(eps), k, prof, custom);
			if(force_gate)
				p.size_gate = true;
			if(skip_gate)
				p.size_gate = false;
			auto st = ctd::reduce(g, p);
			auto dir = kern_out.empty() ? default_out("kernel") : kern_out;
			ctd::save_state(st, dir);
			std::cout << "params: " << p.describe() << "\n"
			          << "mode: " << ctd::to_string(st.mode) << "\n"
			          << "n: " << g.num_vertices() << " -> " << st.reduced.num_vertices() << "\n"
			          << "k': " << st.k_reduced << "\n"
			          << "H: " << st.H.size() << " M: " << st.M.size() << " N: " << st.N.size() << "\n"
			          << "out: " << dir << "\n";
			return 0;
		}
		if(*lift) {
			auto st = ctd::load_state(state_dir);
			auto s = ctd::read_vertex_set(slurp(solution_path));
			std::vector<ctd::trace_entry> steps;
			auto sol = ctd::lift(st, s, &steps);
			spill(lift_out.empty() ? default_out("lifted.txt") : lift_out, ctd::write_vertex_set(sol.vertices));
			for(const auto &e : steps)
				std::cout << "step: " << e.rule << ": " << e.detail << "\n";
			std::cout << "value: " << sol.value << "\n"
			          << "kind: " << ctd::to_string(sol.kind) << "\n"
			          << "size: " << sol.vertices.size() << "\n";
			return 0;
		}
		if(*orc) {
			auto g = ctd::read_graph_file(graph_path);
			auto rep = ctd::opt_tds(g, k, eta, connected, enumerate);
			std::cout << "opt: " << rep.opt_value << "\n";
			if(rep.witness)
				std::cout << "witness: " << ctd::write_vertex_set(*rep.witness);
			else
				std::cout << "witness: none\n";
			std::cout << "optimal-count: " << rep.optimal_count << "\n";
			if(enumerate) {
				std::cout << "feasible: " << rep.feasible.size() << "\n";
				for(const auto &s : rep.feasible)
					std::cout << "set: " << ctd::write_vertex_set(s);
			}
			return 0;
		}
		if(*ver) {
			auto g = ctd::read_graph_file(graph_path);
			auto s = ctd::read_vertex_set(slurp(solution_path));
			bool ok = ctd::verify_ctds(g, s, eta);
			bool small = k < 0 || static_cast<long long>(s.size()) <= k;
			std::cout << "connected-deletion-set: " << (ok ? "yes" : "no") << "\n"
			          << "size: " << s.size() << "\n";
			if(k >= 0)
				std::cout << "within-k: " << (small ? "yes" : "no") << "\n";
			return ok && small ? 0 : 1;
		}
		if(*bench) {
			if(threads > 0)
				omp_set_num_threads(threads);
			std::vector<std::string> names;
			if(suite == "all")
				names = ctd::suite_names();
			else
				names.push_back(suite);
			ctd::report all;
			for(const auto &name : names) {
				auto r = ctd::run_named_suite(name);
				for(auto &row : r.rows) {
					row.id = static_cast<int>(all.rows.size());
					all.rows.push_back(std::move(row));
				}
			}
			spill(bench_out, ctd::emit_report(all, format));
			if(!all.ok()) {
				for(const auto &row : all.rows)
					for(const auto &c : row.checks)
						if(!c.pass)
							std::cerr << "row " << row.id << " " << row.instance << ": " << c.name
							          << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
				return 1;
			}
			return 0;
		}
	} catch(const ctd::graph_format_error &e) {
		std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
		return 2;
	} catch(const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}
