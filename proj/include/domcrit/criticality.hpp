#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "domcrit/domination.hpp"
#include "domcrit/graph.hpp"

namespace domcrit {

// How deleting a vertex moves the domination number.
enum class VertexClass { zero, plus, minus };

std::string_view to_string(VertexClass c);

struct VertexPartition {
	VertexSet zero;
	VertexSet plus;
	VertexSet minus;
};

struct CriticalityProfile {
	int gamma = 0;
	std::vector<VertexClass> classes;
	VertexPartition partition;
	bool is_critical = false;
	bool is_bicritical = false;
	bool is_weak_bicritical = false;
	// Set for order <= 2, where bicriticality holds only vacuously.
	bool degenerate = false;
};

// (x, j) with x diametrical and some gamma-set S meeting
// 2 * |S within distance j of x| >= j + l.
struct SufficientPair {
	Vertex x;
	int j;
	int l;
	VertexSet witness_set;
};

// All functions take an optional memo shared across calls and threads.
VertexClass classify_vertex(const Graph &g, Vertex x, GammaMemo *memo = nullptr);
VertexPartition vertex_partition(const Graph &g, GammaMemo *memo = nullptr);

bool is_critical(const Graph &g, GammaMemo *memo = nullptr);
bool is_k_critical(const Graph &g, int k, GammaMemo *memo = nullptr);
bool is_bicritical(const Graph &g, GammaMemo *memo = nullptr);
bool is_weak_bicritical(const Graph &g, GammaMemo *memo = nullptr);
// Reuses an already computed vertex partition of g.
bool is_weak_bicritical(const Graph &g, const VertexPartition &p, GammaMemo *memo = nullptr);
bool is_weak_k_bicritical(const Graph &g, int k, GammaMemo *memo = nullptr);

CriticalityProfile criticality_profile(const Graph &g, GammaMemo *memo = nullptr);

// Requires a connected graph and l >= 3.
std::vector<SufficientPair> find_sufficient_pairs(const Graph &g, int l, std::uint64_t budget = default_enumeration_budget);

// Ordered pairs (u, v), u != v, with N[u] a subset of N[v].
std::vector<std::pair<Vertex, Vertex>> neighborhood_containment_pairs(const Graph &g);

} // namespace domcrit
