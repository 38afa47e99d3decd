#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "domcrit/criticality.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/families.hpp"
#include "domcrit/graph_io.hpp"
#include "domcrit/isomorphism.hpp"
#include "domcrit/verify.hpp"

namespace domcrit::cli {

namespace {

using nlohmann::json;

// A user-facing error that maps to the usage exit code.
struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

json vertex_list(VertexSet s) {
	return s.to_vector();
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
	if(flag) {
		if(*flag == 0)
			throw UsageError("--budget must be positive");
		return *flag;
	}
	if(const char *env = std::getenv("DOMCRIT_BUDGET")) {
		std::string text(env);
		std::size_t used = 0;
		unsigned long long value = 0;
		try {
			value = std::stoull(text, &used);
		} catch(const std::exception &) {
			used = 0;
		}
		if(used == 0 || used != text.size() || value == 0)
			throw UsageError("DOMCRIT_BUDGET must be a positive integer, got '" + text + "'");
		return value;
	}
	return default_enumeration_budget;
}

std::vector<Graph> load_graphs(const std::string &path, GraphFormat format, std::istream &in) {
	if(path == "-")
		return read_graphs(in, format);
	std::ifstream file(path);
	if(!file)
		throw UsageError("cannot open '" + path + "'");
	return read_graphs(file, format);
}

Graph load_single(const std::string &path, GraphFormat format, std::istream &in) {
	auto graphs = load_graphs(path, format, in);
	if(graphs.size() != 1)
		throw UsageError("'" + path + "' holds " + std::to_string(graphs.size()) + " graphs, expected exactly one");
	return graphs.front();
}

// Writes text to path, or to out when path is empty.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
	if(path.empty()) {
		out << text;
		return;
	}
	std::ofstream file(path, std::ios::binary);
	if(!file)
		throw UsageError("cannot write '" + path + "'");
	file << text;
}

json fk_json(const FkRecognition &r) {
	return json{{"k", r.params.k}, {"m", r.params.m}, {"cut_vertices", r.cut_vertices}, {"endpoints", r.endpoints}};
}

json star_json(const StarCertificate &c) {
	json parts = json::array();
	for(const auto &p : c.parts)
		parts.push_back(star_json(p));
	json out{{"shape", to_string(c.shape)}, {"k", c.k}, {"description", describe(c)}};
	if(!c.m.empty())
		out["m"] = c.m;
	if(c.shape == StarShape::fstar2 || c.shape == StarShape::fpp3)
		out["variant"] = c.variant;
	if(c.shape == StarShape::fpp3) {
		out["cut"] = c.cut;
		out["twin"] = c.twin;
	}
	if(c.shape == StarShape::coalesced) {
		out["attach"] = c.attach;
		out["fk_side"] = vertex_list(c.fk_side);
		out["fstar_side"] = vertex_list(c.fstar_side);
		out["parts"] = std::move(parts);
	}
	return out;
}

json analyze_graph(const Graph &g, std::uint64_t budget) {
	auto profile = criticality_profile(g);
	auto dom = domination_number(g);
	bool connected = is_connected(g);
	json out{
		{"graph6", to_graph6(g)},
		{"n", g.order()},
		{"edges", g.edge_count()},
		{"connected", connected},
		{"gamma", dom.gamma},
		{"gamma_set", vertex_list(dom.witness)},
	};
	try {
		out["gamma_set_count"] = all_gamma_sets(g, dom.gamma, budget).size();
	} catch(const BudgetExceeded &) {
		out["gamma_set_count"] = "unknown";
	}
	if(connected) {
		out["diameter"] = diameter(g).value_or(0);
		out["diametrical_vertices"] = vertex_list(g.order() ? diametrical_vertices(g) : VertexSet{});
	} else {
		out["diameter"] = "infinite";
		out["diametrical_vertices"] = json::array();
	}
	out["classes"] = json{
		{"zero", vertex_list(profile.partition.zero)},
		{"plus", vertex_list(profile.partition.plus)},
		{"minus", vertex_list(profile.partition.minus)},
	};
	out["critical"] = profile.is_critical;
	out["bicritical"] = profile.is_bicritical;
	out["weak_bicritical"] = profile.is_weak_bicritical;
	out["degenerate"] = profile.degenerate;

	auto fk = connected ? recognize_fk(g) : std::nullopt;
	out["fk"] = fk ? fk_json(*fk) : json(nullptr);
	auto star = connected ? recognize_fstar_k(g) : std::nullopt;
	out["fstar_k"] = star ? star_json(*star) : json(nullptr);

	if(!connected) {
		json parts = json::array();
		for(VertexSet c : components(g)) {
			Graph h = induced_subgraph(g, c).graph;
			auto p = criticality_profile(h);
			parts.push_back(json{
				{"vertices", vertex_list(c)},
				{"n", h.order()},
				{"gamma", p.gamma},
				{"diameter", diameter(h).value_or(0)},
				{"critical", p.is_critical},
				{"weak_bicritical", p.is_weak_bicritical},
			});
		}
		out["components"] = std::move(parts);
	}
	return out;
}

json instance_json(const FamilyInstance &inst) {
	return json{
		{"graph6", to_graph6(inst.graph)},
		{"n", inst.graph.order()},
		{"k", inst.k},
		{"construction", to_string(inst.construction)},
		{"m", inst.m},
		{"variant", inst.variant},
		{"endpoints", inst.endpoints},
		{"cut_vertices", inst.cut_vertices},
		{"identifiable", vertex_list(inst.identifiable)},
		{"description", inst.description},
	};
}

void print_table(const ScanReport &report, std::ostream &err) {
	err << std::left << std::setw(14) << "theorem" << std::setw(9) << "status" << std::right << std::setw(11) << "hypothesis"
	    << std::setw(10) << "pass" << std::setw(8) << "fail" << std::setw(11) << "skipped" << '\n';
	for(const auto &c : report.checks) {
		err << std::left << std::setw(14) << c.theorem_id << std::setw(9) << to_string(c.status) << std::right
		    << std::setw(11) << c.hypothesis_count << std::setw(10) << c.pass_count << std::setw(8) << c.fail_count
		    << std::setw(11) << c.skipped_count << '\n';
	}
	err << report.graphs_scanned << " graphs, " << report.coalescence_instances << " coalescence instances\n";
}

int default_jobs() {
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
	CLI::App app{"Domination criticality toolkit", "domcrit"};
	app.require_subcommand(1);
	app.set_version_flag("--version", "domcrit 1.0");

	std::string format_name_in = "graph6";
	std::optional<std::uint64_t> budget_flag;
	std::string out_path;

	// analyze
	auto *analyze = app.add_subcommand("analyze", "Profile every graph in a file");
	std::string analyze_input;
	analyze->add_option("input", analyze_input, "Graph file, '-' for stdin")->required();
	analyze->add_option("--format", format_name_in, "graph6 or edgelist");
	analyze->add_option("--budget", budget_flag, "Gamma-set enumeration budget");
	analyze->add_option("--out", out_path, "Write JSON here instead of stdout");

	// gen
	auto *gen = app.add_subcommand("gen", "Build extremal family members");
	std::string family;
	std::optional<int> k_flag, m1, m2, max_order_flag;
	std::vector<int> m_flag;
	std::string variant_flag, sidecar_path;
	gen->add_option("family", family, "Fk, Fstar2, Fpp3 or Fstar")->required()->check(CLI::IsMember({"Fk", "Fstar2", "Fpp3", "Fstar"}));
	gen->add_option("--k", k_flag, "Domination number k");
	gen->add_option("--m", m_flag, "Block sizes, comma separated")->delimiter(',');
	gen->add_option("--m1", m1, "First F''3 block size");
	gen->add_option("--m2", m2, "Second F''3 block size");
	gen->add_option("--variant", variant_flag, "Fstar2: matching, k3 or p3; Fpp3: 1 or 2");
	gen->add_option("--max-order", max_order_flag, "Enumerate every member up to this order");
	gen->add_option("--out", out_path, "Write graph6 here; the sidecar goes to <out>.json");
	gen->add_option("--sidecar", sidecar_path, "Explicit sidecar path");

	// verify
	auto *verify = app.add_subcommand("verify", "Check the theorems on generated instances");
	std::vector<std::string> theorems;
	ScanConfig scan;
	scan.jobs = default_jobs();
	std::string source = "enumerated";
	std::string verify_input;
	verify->add_option("--theorems", theorems, "Theorem ids, comma separated")->delimiter(',');
	verify->add_option("--n-max", scan.n_max, "Largest order scanned")->check(CLI::NonNegativeNumber);
	verify->add_option("--seed", scan.seed, "Seed for the random coalescence sweep");
	verify->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::PositiveNumber);
	verify->add_option("--budget", budget_flag, "Gamma-set enumeration budget");
	verify->add_option("--out", out_path, "Write the JSON report here instead of stdout");
	verify->add_option("--source", source, "enumerated, families or file")->check(CLI::IsMember({"enumerated", "families", "file"}));
	verify->add_option("--input", verify_input, "Graph file for --source file");
	verify->add_option("--format", format_name_in, "Format of --input");
	verify->add_flag("--connected-only", scan.connected_only, "Scan connected graphs only");
	verify->add_option("--random-pairs", scan.random_pairs, "Random part pairs in the coalescence sweep")->check(CLI::NonNegativeNumber);
	verify->add_option("--pair-max-order", scan.pair_max_order, "Largest part order in the sweep");
	verify->add_flag("!--no-structured-pairs", scan.structured_pairs, "Skip the exhaustive weak bicritical pair sweep");
	verify->add_option("--family-k-max", scan.family_k_max, "Largest k for the gluing check");
	verify->add_option("--family-order-limit", scan.family_order_limit, "Order limit for the gluing check");
	verify->add_option("--counterexample-limit", scan.counterexample_limit, "Counterexamples kept per theorem")->check(CLI::NonNegativeNumber);

	// iso
	auto *iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
	std::string iso_g, iso_h;
	iso->add_option("first", iso_g, "First graph file")->required();
	iso->add_option("second", iso_h, "Second graph file")->required();
	iso->add_option("--format", format_name_in, "graph6 or edgelist");

	// convert
	auto *convert = app.add_subcommand("convert", "Translate between graph formats");
	std::string convert_input, to_name = "edgelist";
	convert->add_option("input", convert_input, "Graph file, '-' for stdin")->required();
	convert->add_option("--format,--from", format_name_in, "Input format");
	convert->add_option("--to", to_name, "Output format");
	convert->add_option("--out", out_path, "Write here instead of stdout");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch(const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		if(analyze->parsed()) {
			std::uint64_t budget = resolve_budget(budget_flag);
			auto graphs = load_graphs(analyze_input, parse_format(format_name_in), in);
			json results = json::array();
			for(const Graph &g : graphs) {
				json r = analyze_graph(g, budget);
				err << r["graph6"].get<std::string>() << ": n=" << g.order() << " gamma=" << r["gamma"] << " critical=" << r["critical"]
				    << " weak_bicritical=" << r["weak_bicritical"] << '\n';
				results.push_back(std::move(r));
			}
			json doc = results.size() == 1 ? results[0] : results;
			emit(doc.dump(2) + "\n", out_path, out);
			return exit_ok;
		}

		if(gen->parsed()) {
			std::vector<FamilyInstance> instances;
			if(family == "Fk") {
				if(!m_flag.empty()) {
					FkParams p{k_flag.value_or(static_cast<int>(m_flag.size()) + 1), m_flag};
					instances.push_back(build_fk(p));
				} else if(k_flag && max_order_flag) {
					instances = enumerate_fk(*k_flag, *max_order_flag);
				} else {
					throw UsageError("Fk needs --m, or --k with --max-order");
				}
			} else if(family == "Fstar2") {
				if(m_flag.size() != 1)
					throw UsageError("Fstar2 needs a single --m");
				instances.push_back(build_fstar2(parse_fstar2_variant(variant_flag.empty() ? "matching" : variant_flag), m_flag[0]));
			} else if(family == "Fpp3") {
				if(!m1 || !m2)
					throw UsageError("Fpp3 needs --m1 and --m2");
				int variant = variant_flag.empty() ? 1 : variant_flag == "1" ? 1 : variant_flag == "2" ? 2 : 0;
				if(variant == 0)
					throw UsageError("Fpp3 --variant must be 1 or 2");
				instances.push_back(build_fpp3(*m1, *m2, variant));
			} else {
				if(!k_flag)
					throw UsageError("Fstar needs --k");
				instances = enumerate_fstar_k(*k_flag, max_order_flag.value_or(12));
			}
			std::string lines;
			json sidecar{{"family", family}, {"instances", json::array()}};
			for(const auto &inst : instances) {
				lines += to_graph6(inst.graph) + "\n";
				sidecar["instances"].push_back(instance_json(inst));
				err << to_graph6(inst.graph) << "  n=" << inst.graph.order() << "  " << inst.description << '\n';
			}
			emit(lines, out_path, out);
			if(sidecar_path.empty() && !out_path.empty())
				sidecar_path = out_path + ".json";
			if(!sidecar_path.empty())
				emit(sidecar.dump(2) + "\n", sidecar_path, out);
			return exit_ok;
		}

		if(verify->parsed()) {
			scan.budget = resolve_budget(budget_flag);
			scan.theorems = theorems;
			if(source == "families") {
				scan.source = ScanSource::family_generated;
			} else if(source == "file") {
				if(verify_input.empty())
					throw UsageError("--source file needs --input");
				scan.source = ScanSource::file;
				scan.graphs = load_graphs(verify_input, parse_format(format_name_in), in);
			}
			ScanReport report = run_scan(scan);
			emit(to_json(report, scan).dump(2) + "\n", out_path, out);
			print_table(report, err);
			return report.any_failure() ? exit_verification_failed : exit_ok;
		}

		if(iso->parsed()) {
			GraphFormat f = parse_format(format_name_in);
			Graph g = load_single(iso_g, f, in), h = load_single(iso_h, f, in);
			bool same = are_isomorphic(g, h);
			json doc{{"isomorphic", same}, {"g_canonical", canonical_form(g)}, {"h_canonical", canonical_form(h)}};
			out << doc.dump(2) << '\n';
			err << (same ? "yes" : "no") << '\n';
			return exit_ok;
		}

		if(convert->parsed()) {
			GraphFormat from = parse_format(format_name_in), to = parse_format(to_name);
			auto graphs = load_graphs(convert_input, from, in);
			if(to == GraphFormat::edge_list && graphs.size() != 1)
				throw UsageError("edge lists hold one graph; input has " + std::to_string(graphs.size()));
			std::string text;
			for(const Graph &g : graphs)
				text += write_graph(g, to);
			emit(text, out_path, out);
			return exit_ok;
		}
	} catch(const BudgetExceeded &e) {
		err << "error: " << e.what() << '\n';
		return exit_budget;
	} catch(const UsageError &e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	} catch(const ParseError &e) {
		err << "parse error: " << e.what() << '\n';
		return exit_usage;
	} catch(const std::invalid_argument &e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	} catch(const std::out_of_range &e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	}
	return exit_usage;
}

} // namespace domcrit::cli
