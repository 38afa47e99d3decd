#pragma once

#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

// One canonical representative per isomorphism class of graphs of order n,
// built by extending every class of order n-1 with a new vertex in all
// possible ways. Output order is independent of the thread count.
std::vector<Graph> nonisomorphic_graphs(int n, int jobs = 1);

// Same, but extends a caller-supplied list of order n-1 representatives.
std::vector<Graph> extend_nonisomorphic(const std::vector<Graph> &previous, int jobs = 1);

} // namespace domcrit
