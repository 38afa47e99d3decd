#pragma once

#include <string>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

// Canonical relabeling found by individualization/refinement search: the
// ordered partition is refined by neighbor counts, cells are individualized in
// turn (skipping twins of already-tried vertices), and among the leaves the
// lexicographically smallest row-major adjacency matrix wins.
//
// Returns perm with perm[old] = new. Exponential in the worst case; meant for
// the small orders used throughout this library.
std::vector<Vertex> canonical_labeling(const Graph &g);
Graph canonical_graph(const Graph &g);

// graph6 string of canonical_graph(g); equal iff the graphs are isomorphic.
std::string canonical_form(const Graph &g);

bool are_isomorphic(const Graph &g, const Graph &h);

} // namespace domcrit
