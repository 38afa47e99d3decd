#include "domcrit/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "domcrit/domination.hpp"
#include "domcrit/enumeration.hpp"
#include "domcrit/families.hpp"
#include "domcrit/graph_io.hpp"
#include "domcrit/isomorphism.hpp"

namespace domcrit {

std::string_view to_string(CheckStatus s) {
	switch(s) {
	case CheckStatus::pass: return "pass";
	case CheckStatus::fail: return "fail";
	case CheckStatus::skipped: return "skipped";
	}
	return "?";
}

GraphFacts analyze(const Graph &g, GammaMemo *memo) {
	GraphFacts f;
	f.graph = g;
	f.connected = is_connected(g);
	f.diameter = diameter(g);
	f.profile = criticality_profile(g, memo);
	return f;
}

const std::vector<std::string> &all_theorem_ids() {
	static const std::vector<std::string> ids{
		std::string(theorem::thm_a), std::string(theorem::thm_b), std::string(theorem::thm_c),
		std::string(theorem::thm_d), std::string(theorem::thm_e), std::string(theorem::thm1),
		std::string(theorem::thm2_1_fwd), std::string(theorem::thm2_1_bwd), std::string(theorem::thm3_1),
		std::string(theorem::lem1_1), std::string(theorem::lem1_2), std::string(theorem::lem1_22),
		std::string(theorem::lem1_3), std::string(theorem::lem3a_l3), std::string(theorem::lem3a_l4),
		std::string(theorem::obs1_2_1), std::string(theorem::components_wb),
	};
	return ids;
}

namespace {

std::string diam_text(const GraphFacts &f) {
	return f.diameter ? std::to_string(*f.diameter) : "inf";
}

std::string set_text(VertexSet s) {
	std::string out = "{";
	for(Vertex v : s)
		out += (out.size() > 1 ? "," : "") + std::to_string(v);
	return out + "}";
}

bool weak_k_bicritical_connected(const GraphFacts &f, int min_k) {
	return f.connected && f.profile.is_weak_bicritical && f.profile.gamma >= min_k;
}

} // namespace

Outcome check_thm_a(const GraphFacts &f) {
	int k = f.profile.gamma;
	if(!f.connected || !f.profile.is_critical || k < 2)
		return Outcome::skip();
	return Outcome::expect(*f.diameter <= 2 * k - 2, "critical, gamma=" + std::to_string(k) + ", diam=" + diam_text(f));
}

Outcome check_thm_c(const GraphFacts &f) {
	int k = f.profile.gamma;
	if(!f.connected || !f.profile.is_bicritical || f.profile.degenerate || k < 3)
		return Outcome::skip();
	return Outcome::expect(*f.diameter <= 2 * k - 3, "bicritical, gamma=" + std::to_string(k) + ", diam=" + diam_text(f));
}

Outcome check_thm_d(const GraphFacts &f) {
	if(!weak_k_bicritical_connected(f, 2))
		return Outcome::skip();
	int k = f.profile.gamma;
	return Outcome::expect(*f.diameter <= 2 * k - 2, "weak bicritical, gamma=" + std::to_string(k) + ", diam=" + diam_text(f));
}

Outcome check_thm1(const GraphFacts &f) {
	if(!weak_k_bicritical_connected(f, 2))
		return Outcome::skip();
	int k = f.profile.gamma;
	if(*f.diameter > 2 * k - 2)
		return Outcome::fail("weak bicritical, gamma=" + std::to_string(k) + ", diam=" + diam_text(f) + " exceeds bound");
	bool extremal = *f.diameter == 2 * k - 2;
	bool member = recognize_fstar_k(f.graph).has_value();
	return Outcome::expect(extremal == member, "gamma=" + std::to_string(k) + ", diam=" + diam_text(f) + ", F*_k member=" + (member ? "yes" : "no"));
}

Outcome check_thm_e(const GraphFacts &f) {
	int k = f.profile.gamma;
	if(!f.connected || !f.profile.is_critical || k < 2)
		return Outcome::skip();
	if(*f.diameter > 2 * k - 2)
		return Outcome::fail("critical, gamma=" + std::to_string(k) + ", diam=" + diam_text(f) + " exceeds bound");
	bool extremal = *f.diameter == 2 * k - 2;
	auto rec = recognize_fk(f.graph);
	bool member = rec && rec->params.k == k;
	return Outcome::expect(extremal == member, "gamma=" + std::to_string(k) + ", diam=" + diam_text(f) + ", F_k member=" + (member ? "yes" : "no"));
}

Outcome check_thm3_1(const GraphFacts &f) {
	if(!weak_k_bicritical_connected(f, 3))
		return Outcome::skip();
	int k = f.profile.gamma;
	VertexSet critical = f.profile.partition.minus;
	std::optional<Vertex> witness;
	for(Vertex x : diametrical_vertices(f.graph)) {
		auto layers = distance_layers(f.graph, x);
		VertexSet near;
		for(std::size_t i = 1; i <= 3 && i < layers.size(); ++i)
			near |= layers[i];
		if(layers.size() > 2 && layers[2].size() >= 2 && near.is_subset_of(critical)) {
			witness = x;
			break;
		}
	}
	if(!witness)
		return Outcome::skip();
	return Outcome::expect(*f.diameter <= 2 * k - 3, "gamma=" + std::to_string(k) + ", diam=" + diam_text(f) + ", x=" + std::to_string(*witness));
}

Outcome check_lem3a(const GraphFacts &f, int l, std::uint64_t budget) {
	if(!weak_k_bicritical_connected(f, 3))
		return Outcome::skip();
	int k = f.profile.gamma;
	auto pairs = find_sufficient_pairs(f.graph, l, budget);
	if(pairs.empty())
		return Outcome::skip();
	const auto &p = pairs.front();
	return Outcome::expect(*f.diameter <= 2 * k - l + 1,
		"gamma=" + std::to_string(k) + ", l=" + std::to_string(l) + ", diam=" + diam_text(f) + ", pair=(" + std::to_string(p.x) + "," + std::to_string(p.j) + ") S=" + set_text(p.witness_set));
}

Outcome check_lem1_1(const GraphFacts &f) {
	auto pairs = neighborhood_containment_pairs(f.graph);
	if(pairs.empty())
		return Outcome::skip();
	for(auto [u, v] : pairs)
		if(f.profile.partition.minus.contains(v))
			return Outcome::fail("N[" + std::to_string(u) + "] within N[" + std::to_string(v) + "] but " + std::to_string(v) + " is critical");
	return Outcome::pass();
}

Outcome check_lem1_2(const GraphFacts &f) {
	if(!f.profile.is_weak_bicritical)
		return Outcome::skip();
	for(VertexSet c : components(f.graph)) {
		if(c.size() < 3)
			continue;
		for(Vertex v : c)
			if(f.graph.degree(v) < 2)
				return Outcome::fail("vertex " + std::to_string(v) + " of a component of order " + std::to_string(c.size()) + " has degree " + std::to_string(f.graph.degree(v)));
	}
	return Outcome::pass();
}

namespace {

Graph matching_with(int pairs, std::optional<Graph> extra) {
	std::vector<Graph> parts(pairs, complete_graph(2));
	if(extra)
		parts.push_back(*extra);
	return complement(disjoint_union(parts));
}

// complement(mK2), complement(mK2 + K3) or complement((m-1)K2 + P3), m >= 1.
bool in_weak2_family(const Graph &g) {
	int n = g.order();
	if(n >= 2 && n % 2 == 0)
		return are_isomorphic(g, matching_with(n / 2, std::nullopt));
	if(n >= 5 && are_isomorphic(g, matching_with((n - 3) / 2, complete_graph(3))))
		return true;
	return n >= 3 && n % 2 == 1 && are_isomorphic(g, matching_with((n - 3) / 2, path_graph(3)));
}

bool in_critical2_family(const Graph &g) {
	int n = g.order();
	return n >= 2 && n % 2 == 0 && are_isomorphic(g, matching_with(n / 2, std::nullopt));
}

} // namespace

Outcome check_lem1_22(const GraphFacts &f) {
	bool weak2 = f.profile.is_weak_bicritical && f.profile.gamma == 2;
	bool critical2 = f.profile.is_critical && f.profile.gamma == 2;
	bool family = in_weak2_family(f.graph);
	bool family_critical = in_critical2_family(f.graph);
	if(weak2 != family)
		return Outcome::fail(std::string("weak 2-bicritical=") + (weak2 ? "yes" : "no") + ", complement family=" + (family ? "yes" : "no"));
	return Outcome::expect(critical2 == family_critical,
		std::string("2-critical=") + (critical2 ? "yes" : "no") + ", complement of matching=" + (family_critical ? "yes" : "no"));
}

Outcome check_components_wb(const GraphFacts &f) {
	if(f.connected || !f.profile.is_weak_bicritical)
		return Outcome::skip();
	int non_critical = 0;
	for(VertexSet c : components(f.graph)) {
		Graph h = induced_subgraph(f.graph, c).graph;
		auto p = criticality_profile(h);
		if(!p.is_weak_bicritical)
			return Outcome::fail("component " + set_text(c) + " is not weak bicritical");
		non_critical += !p.is_critical;
	}
	return Outcome::expect(non_critical <= 1, std::to_string(non_critical) + " non-critical components");
}

namespace {

struct Part {
	Graph graph;
	int gamma = 0;
	VertexPartition partition;
	bool critical = false;
	bool weak_bicritical = false;
};

Part make_part(const Graph &g) {
	Part p;
	p.graph = g;
	p.gamma = gamma(g);
	p.partition = vertex_partition(g);
	p.critical = p.partition.minus == g.vertices();
	p.weak_bicritical = is_weak_bicritical(g, p.partition);
	return p;
}

std::string coalesce_text(const Part &h1, Vertex x1, const Part &h2, Vertex x2) {
	return "H1=" + to_graph6(h1.graph) + " x1=" + std::to_string(x1) + " H2=" + to_graph6(h2.graph) + " x2=" + std::to_string(x2);
}

Thm21Outcome thm2_1_on(const Part &h1, Vertex x1, const Part &h2, Vertex x2, const CoalescenceResult &c, const Part &g) {
	if(h1.graph.degree(x1) == 0 || h2.graph.degree(x2) == 0)
		return {Outcome::skip(), Outcome::skip()};
	auto side = [](const Part &crit, const Part &weak, Vertex x) {
		return crit.critical && weak.weak_bicritical && weak.partition.minus.contains(x);
	};
	bool rhs = side(h1, h2, x2) || side(h2, h1, x1);
	bool additive = g.gamma == h1.gamma + h2.gamma - 1;
	std::string ctx = coalesce_text(h1, x1, h2, x2) + " merged=" + std::to_string(c.merged_vertex);

	Thm21Outcome out;
	if(g.weak_bicritical)
		out.forward = Outcome::expect(rhs && additive, "G weak bicritical; conditions=" + std::string(rhs ? "yes" : "no") + ", gamma(G)=" + std::to_string(g.gamma) + " vs " + std::to_string(h1.gamma + h2.gamma - 1) + "; " + ctx);
	if(rhs)
		out.backward = Outcome::expect(g.weak_bicritical, "conditions hold but G is not weak bicritical; " + ctx);
	return out;
}

Outcome lem1_3_on(const Part &h1, Vertex x1, const Part &h2, Vertex x2, const CoalescenceResult &c, const Part &g) {
	if(h1.graph.degree(x1) == 0 || h2.graph.degree(x2) == 0)
		return Outcome::skip();
	std::string ctx = coalesce_text(h1, x1, h2, x2);
	int lo = h1.gamma + h2.gamma - 1;
	if(g.gamma < lo || g.gamma > lo + 1)
		return Outcome::fail("gamma(G)=" + std::to_string(g.gamma) + " outside [" + std::to_string(lo) + "," + std::to_string(lo + 1) + "]; " + ctx);
	bool c1 = h1.partition.minus.contains(x1), c2 = h2.partition.minus.contains(x2);
	if((c1 || c2) && g.gamma != lo)
		return Outcome::fail("critical attach vertex but gamma(G)=" + std::to_string(g.gamma) + "; " + ctx);
	if(c1 && c2) {
		VertexSet expected = VertexSet::single(c.merged_vertex);
		for(Vertex v : h1.partition.minus - VertexSet::single(x1))
			expected.insert(c.map1[v]);
		for(Vertex v : h2.partition.minus - VertexSet::single(x2))
			expected.insert(c.map2[v]);
		if(expected != g.partition.minus)
			return Outcome::fail("V-(G)=" + set_text(g.partition.minus) + " expected " + set_text(expected) + "; " + ctx);
		if(g.critical != (h1.critical && h2.critical))
			return Outcome::fail("criticality of G does not match both parts; " + ctx);
	}
	return Outcome::pass();
}

} // namespace

Thm21Outcome check_thm2_1(const Graph &h1, Vertex x1, const Graph &h2, Vertex x2) {
	Part p1 = make_part(h1), p2 = make_part(h2);
	auto c = coalesce(h1, x1, h2, x2);
	return thm2_1_on(p1, x1, p2, x2, c, make_part(c.graph));
}

Outcome check_lem1_3(const Graph &h1, Vertex x1, const Graph &h2, Vertex x2) {
	Part p1 = make_part(h1), p2 = make_part(h2);
	auto c = coalesce(h1, x1, h2, x2);
	return lem1_3_on(p1, x1, p2, x2, c, make_part(c.graph));
}

Outcome check_obs1_2_1(int k, int order_limit) {
	if(k < 3)
		return Outcome::skip();
	std::set<std::string> glued, direct;
	for(const auto &inst : enumerate_fk(k, order_limit))
		direct.insert(canonical_form(inst.graph));
	for(int k1 = 2; k1 <= k - 1; ++k1) {
		int k2 = k - k1 + 1;
		for(const auto &h1 : enumerate_fk(k1, order_limit - 3)) {
			for(const auto &h2 : enumerate_fk(k2, order_limit - h1.graph.order() + 1)) {
				VertexSet d2 = diametrical_vertices(h2.graph);
				for(Vertex u1 : diametrical_vertices(h1.graph))
					for(Vertex u2 : d2)
						glued.insert(canonical_form(coalesce(h1.graph, u1, h2.graph, u2).graph));
			}
		}
	}
	if(glued == direct)
		return Outcome::pass();
	std::vector<std::string> only_glued, only_direct;
	std::set_difference(glued.begin(), glued.end(), direct.begin(), direct.end(), std::back_inserter(only_glued));
	std::set_difference(direct.begin(), direct.end(), glued.begin(), glued.end(), std::back_inserter(only_direct));
	return Outcome::fail("k=" + std::to_string(k) + ": " + std::to_string(only_glued.size()) + " glued graphs outside F_k"
		+ (only_glued.empty() ? "" : " (e.g. " + only_glued.front() + ")") + ", " + std::to_string(only_direct.size()) + " F_k members not glued"
		+ (only_direct.empty() ? "" : " (e.g. " + only_direct.front() + ")"));
}

std::vector<GraphCheck> standard_graph_checks(std::uint64_t budget) {
	return {
		{std::string(theorem::thm_a), check_thm_a},
		{std::string(theorem::thm_c), check_thm_c},
		{std::string(theorem::thm_d), check_thm_d},
		{std::string(theorem::thm_e), check_thm_e},
		{std::string(theorem::thm1), check_thm1},
		{std::string(theorem::thm3_1), check_thm3_1},
		{std::string(theorem::lem1_1), check_lem1_1},
		{std::string(theorem::lem1_2), check_lem1_2},
		{std::string(theorem::lem1_22), check_lem1_22},
		{std::string(theorem::lem3a_l3), [budget](const GraphFacts &f) { return check_lem3a(f, 3, budget); }},
		{std::string(theorem::lem3a_l4), [budget](const GraphFacts &f) { return check_lem3a(f, 4, budget); }},
		{std::string(theorem::components_wb), check_components_wb},
	};
}

bool ScanReport::any_failure() const {
	return std::any_of(checks.begin(), checks.end(), [](const TheoremCheck &c) { return c.fail_count > 0; });
}

const TheoremCheck *ScanReport::find(std::string_view id) const {
	for(const auto &c : checks)
		if(c.theorem_id == id)
			return &c;
	return nullptr;
}

namespace {

template<typename R, typename F>
std::vector<R> parallel_map(std::size_t count, int jobs, F fn) {
	std::vector<R> out(count);
	jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
	auto work = [&](int id) {
		for(std::size_t i = id; i < count; i += jobs)
			out[i] = fn(i);
	};
	if(jobs == 1) {
		work(0);
		return out;
	}
	std::vector<std::thread> pool;
	std::vector<std::exception_ptr> errors(jobs);
	for(int id = 0; id < jobs; ++id) {
		pool.emplace_back([&, id] {
			try {
				work(id);
			} catch(...) {
				errors[id] = std::current_exception();
			}
		});
	}
	for(auto &t : pool)
		t.join();
	for(auto &e : errors)
		if(e)
			std::rethrow_exception(e);
	return out;
}

void record(TheoremCheck &check, const Outcome &o, Counterexample cx, int limit) {
	switch(o.status) {
	case CheckStatus::skipped:
		++check.skipped_count;
		return;
	case CheckStatus::pass:
		++check.hypothesis_count;
		++check.pass_count;
		return;
	case CheckStatus::fail:
		++check.hypothesis_count;
		++check.fail_count;
		if(static_cast<int>(check.counterexamples.size()) < limit) {
			cx.diagnostics = o.diagnostics;
			check.counterexamples.push_back(std::move(cx));
		}
		return;
	}
}

void settle(TheoremCheck &check) {
	if(check.fail_count > 0)
		check.status = CheckStatus::fail;
	else if(check.hypothesis_count > 0)
		check.status = CheckStatus::pass;
	else
		check.status = CheckStatus::skipped;
}

Graph random_connected_graph(std::mt19937_64 &rng, int max_n) {
	int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
	for(;;) {
		std::vector<Edge> edges;
		for(Vertex u = 0; u < n; ++u)
			for(Vertex v = u + 1; v < n; ++v)
				if(rng() & 1)
					edges.emplace_back(u, v);
		Graph g(n, edges);
		if(is_connected(g))
			return g;
	}
}

std::vector<Graph> scan_graphs(const ScanConfig &config, std::vector<long> &per_order) {
	std::vector<Graph> out;
	per_order.assign(config.n_max + 1, 0);
	auto keep = [&](const Graph &g) {
		return g.order() <= config.n_max && (!config.connected_only || is_connected(g));
	};
	switch(config.source) {
	case ScanSource::enumerated_all: {
		std::vector<Graph> reps{Graph(0)};
		for(int n = 1; n <= config.n_max; ++n) {
			reps = extend_nonisomorphic(reps, config.jobs);
			for(const Graph &g : reps)
				if(keep(g))
					out.push_back(g);
		}
		break;
	}
	case ScanSource::family_generated: {
		std::set<std::string> seen;
		for(int k = 2; 2 * k - 2 <= 2 * config.n_max; ++k) {
			auto members = enumerate_fstar_k(k, config.n_max);
			if(members.empty())
				break;
			for(const auto &inst : members)
				if(keep(inst.graph) && seen.insert(canonical_form(inst.graph)).second)
					out.push_back(inst.graph);
		}
		break;
	}
	case ScanSource::file:
		for(const Graph &g : config.graphs)
			if(keep(g))
				out.push_back(g);
		break;
	}
	for(const Graph &g : out)
		++per_order[g.order()];
	return out;
}

bool selected(const ScanConfig &config, std::string_view id) {
	return config.theorems.empty() || std::find(config.theorems.begin(), config.theorems.end(), id) != config.theorems.end();
}

} // namespace

ScanReport run_scan(const ScanConfig &config) {
	if(config.n_max < 0)
		throw std::invalid_argument("n_max must be non-negative");
	if(config.source == ScanSource::enumerated_all && config.n_max > scan_order_cap)
		throw BudgetExceeded("exhaustive scans are capped at order " + std::to_string(scan_order_cap));
	if(config.pair_max_order < 2 || config.pair_max_order > 32)
		throw std::invalid_argument("pair_max_order must lie in [2, 32]");

	std::vector<GraphCheck> checks = standard_graph_checks(config.budget);
	checks.insert(checks.end(), config.extra_checks.begin(), config.extra_checks.end());
	for(const auto &id : config.theorems) {
		bool known = std::find(all_theorem_ids().begin(), all_theorem_ids().end(), id) != all_theorem_ids().end()
			|| std::any_of(checks.begin(), checks.end(), [&](const GraphCheck &c) { return c.id == id; });
		if(!known)
			throw std::invalid_argument("unknown theorem id '" + id + "'");
	}
	std::erase_if(checks, [&](const GraphCheck &c) { return !selected(config, c.id); });

	ScanReport report;
	std::map<std::string, TheoremCheck> by_id;
	auto slot = [&](std::string_view id) -> TheoremCheck & {
		auto &c = by_id[std::string(id)];
		c.theorem_id = id;
		return c;
	};

	// Per-graph checks.
	auto graphs = scan_graphs(config, report.graphs_per_order);
	report.graphs_scanned = static_cast<long>(graphs.size());
	if(!checks.empty()) {
		auto outcomes = parallel_map<std::vector<Outcome>>(graphs.size(), config.jobs, [&](std::size_t i) {
			GraphFacts f = analyze(graphs[i]);
			std::vector<Outcome> row;
			row.reserve(checks.size());
			for(const auto &c : checks)
				row.push_back(c.run(f));
			return row;
		});
		for(std::size_t i = 0; i < graphs.size(); ++i)
			for(std::size_t c = 0; c < checks.size(); ++c) {
				Counterexample cx;
				cx.graph6 = to_graph6(graphs[i]);
				record(slot(checks[c].id), outcomes[i][c], std::move(cx), config.counterexample_limit);
			}
	}

	// Random coalescence sweep.
	bool want21 = selected(config, theorem::thm2_1_fwd) || selected(config, theorem::thm2_1_bwd);
	bool want13 = selected(config, theorem::lem1_3);
	if((want21 || want13) && (config.random_pairs > 0 || config.structured_pairs)) {
		std::mt19937_64 rng{config.seed};
		std::vector<std::pair<Graph, Graph>> pairs;
		for(int i = 0; i < config.random_pairs; ++i) {
			Graph a = random_connected_graph(rng, config.pair_max_order);
			Graph b = random_connected_graph(rng, config.pair_max_order);
			pairs.emplace_back(std::move(a), std::move(b));
		}
		if(config.structured_pairs) {
			std::vector<Graph> pool;
			for(int n = 2; n <= std::min(config.pair_max_order, 7); ++n)
				for(const Graph &g : nonisomorphic_graphs(n, config.jobs))
					if(is_connected(g) && is_weak_bicritical(g))
						pool.push_back(g);
			for(const Graph &a : pool)
				for(const Graph &b : pool)
					pairs.emplace_back(a, b);
		}
		struct PairResult {
			std::vector<Thm21Outcome> thm21;
			std::vector<Outcome> lem13;
			std::vector<std::pair<Vertex, Vertex>> attach;
			std::vector<std::string> merged;
		};
		auto results = parallel_map<PairResult>(pairs.size(), config.jobs, [&](std::size_t i) {
			PairResult r;
			Part h1 = make_part(pairs[i].first), h2 = make_part(pairs[i].second);
			for(Vertex x1 = 0; x1 < h1.graph.order(); ++x1) {
				for(Vertex x2 = 0; x2 < h2.graph.order(); ++x2) {
					auto c = coalesce(h1.graph, x1, h2.graph, x2);
					Part g = make_part(c.graph);
					r.attach.emplace_back(x1, x2);
					r.merged.push_back(to_graph6(c.graph));
					if(want21)
						r.thm21.push_back(thm2_1_on(h1, x1, h2, x2, c, g));
					if(want13)
						r.lem13.push_back(lem1_3_on(h1, x1, h2, x2, c, g));
				}
			}
			return r;
		});
		for(std::size_t i = 0; i < pairs.size(); ++i) {
			const auto &r = results[i];
			for(std::size_t j = 0; j < r.attach.size(); ++j) {
				++report.coalescence_instances;
				Counterexample cx;
				cx.graph6 = r.merged[j];
				cx.h1_graph6 = to_graph6(pairs[i].first);
				cx.h2_graph6 = to_graph6(pairs[i].second);
				cx.x1 = r.attach[j].first;
				cx.x2 = r.attach[j].second;
				if(want21) {
					if(selected(config, theorem::thm2_1_fwd))
						record(slot(theorem::thm2_1_fwd), r.thm21[j].forward, cx, config.counterexample_limit);
					if(selected(config, theorem::thm2_1_bwd))
						record(slot(theorem::thm2_1_bwd), r.thm21[j].backward, cx, config.counterexample_limit);
				}
				if(want13)
					record(slot(theorem::lem1_3), r.lem13[j], cx, config.counterexample_limit);
			}
		}
	}

	if(selected(config, theorem::obs1_2_1)) {
		auto &check = slot(theorem::obs1_2_1);
		for(int k = 3; k <= config.family_k_max; ++k) {
			Counterexample cx;
			cx.k = k;
			cx.order_limit = config.family_order_limit;
			record(check, check_obs1_2_1(k, config.family_order_limit), cx, config.counterexample_limit);
		}
	}
	if(selected(config, theorem::thm_b))
		slot(theorem::thm_b);

	std::vector<std::string> order = all_theorem_ids();
	for(const auto &c : config.extra_checks)
		order.push_back(c.id);
	for(const auto &id : order) {
		auto it = by_id.find(id);
		if(it == by_id.end())
			continue;
		settle(it->second);
		report.checks.push_back(std::move(it->second));
		by_id.erase(it);
	}
	return report;
}

bool reproduces(std::string_view theorem_id, const Counterexample &cx, const ScanConfig &config) {
	if(theorem_id == theorem::obs1_2_1)
		return check_obs1_2_1(cx.k, cx.order_limit).status == CheckStatus::fail;
	if(theorem_id == theorem::thm2_1_fwd || theorem_id == theorem::thm2_1_bwd || theorem_id == theorem::lem1_3) {
		if(!cx.h1_graph6 || !cx.h2_graph6)
			return false;
		Graph h1 = from_graph6(*cx.h1_graph6), h2 = from_graph6(*cx.h2_graph6);
		if(theorem_id == theorem::lem1_3)
			return check_lem1_3(h1, cx.x1, h2, cx.x2).status == CheckStatus::fail;
		auto o = check_thm2_1(h1, cx.x1, h2, cx.x2);
		return (theorem_id == theorem::thm2_1_fwd ? o.forward : o.backward).status == CheckStatus::fail;
	}
	std::vector<GraphCheck> checks = standard_graph_checks(config.budget);
	checks.insert(checks.end(), config.extra_checks.begin(), config.extra_checks.end());
	for(const auto &c : checks)
		if(c.id == theorem_id)
			return c.run(analyze(from_graph6(cx.graph6))).status == CheckStatus::fail;
	return false;
}

nlohmann::json to_json(const ScanReport &report, const ScanConfig &config) {
	using nlohmann::json;
	json cfg{
		{"n_max", config.n_max},
		{"connected_only", config.connected_only},
		{"source", config.source == ScanSource::enumerated_all ? "enumerated-all" : config.source == ScanSource::family_generated ? "family-generated" : "file"},
		{"seed", config.seed},
		{"random_pairs", config.random_pairs},
		{"pair_max_order", config.pair_max_order},
		{"structured_pairs", config.structured_pairs},
		{"family_k_max", config.family_k_max},
		{"family_order_limit", config.family_order_limit},
		{"theorems", config.theorems},
	};
	json checks = json::array();
	for(const auto &c : report.checks) {
		json cxs = json::array();
		for(const auto &cx : c.counterexamples) {
			json item{{"graph6", cx.graph6}, {"diagnostics", cx.diagnostics}};
			if(cx.h1_graph6) {
				item["h1"] = *cx.h1_graph6;
				item["x1"] = cx.x1;
				item["h2"] = *cx.h2_graph6;
				item["x2"] = cx.x2;
			}
			if(cx.k > 0) {
				item["k"] = cx.k;
				item["order_limit"] = cx.order_limit;
			}
			cxs.push_back(std::move(item));
		}
		checks.push_back(json{
			{"theorem_id", c.theorem_id},
			{"status", to_string(c.status)},
			{"hypothesis_count", c.hypothesis_count},
			{"pass_count", c.pass_count},
			{"fail_count", c.fail_count},
			{"skipped_count", c.skipped_count},
			{"counterexamples", std::move(cxs)},
		});
	}
	return json{
		{"config", std::move(cfg)},
		{"graphs_scanned", report.graphs_scanned},
		{"graphs_per_order", report.graphs_per_order},
		{"coalescence_instances", report.coalescence_instances},
		{"checks", std::move(checks)},
	};
}

} // namespace domcrit
