#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

// Raised when an exact enumeration would exceed its candidate budget.
class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct DominationResult {
	int gamma = 0;
	VertexSet witness;
	std::optional<std::vector<VertexSet>> all_min_sets;
};

bool is_dominating_set(const Graph &g, VertexSet s);

// Exact minimum dominating set, summed over components. Within a component the
// search tries budgets k = ceil(n / (maxdeg + 1)), k + 1, ... and branches on
// the lowest undominated vertex v over the members of N[v] in increasing order.
DominationResult domination_number(const Graph &g);
int gamma(const Graph &g);

// Every dominating set of size gamma(g), sorted lexicographically. Throws
// BudgetExceeded when C(n, gamma) exceeds the budget.
std::vector<VertexSet> all_gamma_sets(const Graph &g, std::uint64_t budget = default_enumeration_budget);
std::vector<VertexSet> all_gamma_sets(const Graph &g, int gamma, std::uint64_t budget);

DominationResult domination_with_all_sets(const Graph &g, std::uint64_t budget = default_enumeration_budget);

int gamma_after_delete(const Graph &g, VertexSet xs);

// Memo table for gamma keyed by the labeled graph. Concurrent lookups share a
// reader lock; insertions are serialized.
class GammaMemo {
public:
	int gamma(const Graph &g);
	std::size_t size() const;

private:
	mutable std::shared_mutex mutex_;
	std::unordered_map<Graph, int, GraphHash> table_;
};

} // namespace domcrit
