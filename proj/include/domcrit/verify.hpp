#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "domcrit/criticality.hpp"
#include "domcrit/graph.hpp"

namespace domcrit {

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

// Result of one check on one instance. Skipped means the hypothesis failed.
struct Outcome {
	CheckStatus status = CheckStatus::skipped;
	std::string diagnostics;

	static Outcome pass() { return {CheckStatus::pass, {}}; }
	static Outcome skip() { return {CheckStatus::skipped, {}}; }
	static Outcome fail(std::string why) { return {CheckStatus::fail, std::move(why)}; }
	// Pass when ok holds, otherwise fail with the diagnostics.
	static Outcome expect(bool ok, std::string why) { return ok ? pass() : fail(std::move(why)); }
};

// Everything the per-graph checks share, computed once per graph.
struct GraphFacts {
	Graph graph;
	bool connected = false;
	std::optional<int> diameter;
	CriticalityProfile profile;
};

GraphFacts analyze(const Graph &g, GammaMemo *memo = nullptr);

namespace theorem {
inline constexpr std::string_view thm_a = "ThmA";
inline constexpr std::string_view thm_b = "ThmB";
inline constexpr std::string_view thm_c = "ThmC";
inline constexpr std::string_view thm_d = "ThmD";
inline constexpr std::string_view thm_e = "ThmE";
inline constexpr std::string_view thm1 = "Thm1";
inline constexpr std::string_view thm2_1_fwd = "Thm2_1_fwd";
inline constexpr std::string_view thm2_1_bwd = "Thm2_1_bwd";
inline constexpr std::string_view thm3_1 = "Thm3_1";
inline constexpr std::string_view lem1_1 = "Lem1_1";
inline constexpr std::string_view lem1_2 = "Lem1_2";
inline constexpr std::string_view lem1_22 = "Lem1_22";
inline constexpr std::string_view lem1_3 = "Lem1_3";
inline constexpr std::string_view lem3a_l3 = "Lem3A_l3";
inline constexpr std::string_view lem3a_l4 = "Lem3A_l4";
inline constexpr std::string_view obs1_2_1 = "Obs1_2_1";
inline constexpr std::string_view components_wb = "ComponentsWB";
} // namespace theorem

// Every theorem id in report order.
const std::vector<std::string> &all_theorem_ids();

// Per-graph checks.
Outcome check_thm_a(const GraphFacts &f);
Outcome check_thm_c(const GraphFacts &f);
Outcome check_thm_d(const GraphFacts &f);
Outcome check_thm1(const GraphFacts &f);
Outcome check_thm_e(const GraphFacts &f);
Outcome check_thm3_1(const GraphFacts &f);
Outcome check_lem3a(const GraphFacts &f, int l, std::uint64_t budget = default_enumeration_budget);
Outcome check_lem1_1(const GraphFacts &f);
Outcome check_lem1_2(const GraphFacts &f);
Outcome check_lem1_22(const GraphFacts &f);
Outcome check_components_wb(const GraphFacts &f);

// Coalescence checks on (H1 . H2)(x1, x2; x).
struct Thm21Outcome {
	Outcome forward;
	Outcome backward;
};
Thm21Outcome check_thm2_1(const Graph &h1, Vertex x1, const Graph &h2, Vertex x2);
Outcome check_lem1_3(const Graph &h1, Vertex x1, const Graph &h2, Vertex x2);

// Coalescences of F_{k1} and F_{k2} at diametrical vertices, k1 + k2 - 1 = k,
// coincide up to isomorphism with F_k, for members of order <= order_limit.
Outcome check_obs1_2_1(int k, int order_limit);

struct GraphCheck {
	std::string id;
	std::function<Outcome(const GraphFacts &)> run;
};

std::vector<GraphCheck> standard_graph_checks(std::uint64_t budget = default_enumeration_budget);

struct Counterexample {
	std::string graph6;
	std::string diagnostics;
	// Coalescence checks: the two parts and their attach vertices.
	std::optional<std::string> h1_graph6;
	std::optional<std::string> h2_graph6;
	Vertex x1 = -1;
	Vertex x2 = -1;
	// Obs1_2_1 instances carry k and the order limit instead of a graph.
	int k = 0;
	int order_limit = 0;
};

struct TheoremCheck {
	std::string theorem_id;
	CheckStatus status = CheckStatus::skipped;
	long hypothesis_count = 0;
	long pass_count = 0;
	long fail_count = 0;
	long skipped_count = 0;
	std::vector<Counterexample> counterexamples;
};

enum class ScanSource { enumerated_all, family_generated, file };

struct ScanConfig {
	int n_max = 7;
	bool connected_only = false;
	ScanSource source = ScanSource::enumerated_all;
	// Used when source is file.
	std::vector<Graph> graphs;
	// Empty selects every theorem.
	std::vector<std::string> theorems;
	std::uint64_t seed = 20170101;
	int jobs = 1;
	std::uint64_t budget = default_enumeration_budget;
	// Random coalescence sweep: pairs of connected graphs of order 2..pair_max_order.
	int random_pairs = 1000;
	int pair_max_order = 6;
	// Also glue every pair of connected weak bicritical graphs of order
	// 2..pair_max_order at all attach vertices. Random parts rarely meet the
	// hypotheses, so this keeps both directions of the equivalence exercised.
	bool structured_pairs = true;
	// Obs1_2_1 range.
	int family_k_max = 4;
	int family_order_limit = 12;
	int counterexample_limit = 10;
	std::vector<GraphCheck> extra_checks;
};

inline constexpr int scan_order_cap = 10;

struct ScanReport {
	std::vector<TheoremCheck> checks;
	std::vector<long> graphs_per_order;
	long graphs_scanned = 0;
	long coalescence_instances = 0;

	bool any_failure() const;
	const TheoremCheck *find(std::string_view id) const;
};

// Throws BudgetExceeded when n_max exceeds scan_order_cap for enumerated scans.
ScanReport run_scan(const ScanConfig &config);

// Reruns the named check on a counterexample in isolation; true when the
// violation reproduces.
bool reproduces(std::string_view theorem_id, const Counterexample &cx, const ScanConfig &config = {});

nlohmann::json to_json(const ScanReport &report, const ScanConfig &config);

} // namespace domcrit
