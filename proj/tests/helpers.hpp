#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "domcrit/graph.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Matrix to_matrix(const domcrit::Graph &g) {
	auto list = g.edges();
	std::vector<std::pair<int, int>> edges(list.begin(), list.end());
	return oracle::matrix_from_edges(g.order(), edges);
}

inline domcrit::Graph random_graph(std::mt19937_64 &rng, int n, double p) {
	std::bernoulli_distribution coin(p);
	std::vector<domcrit::Edge> edges;
	for(int u = 0; u < n; ++u)
		for(int v = u + 1; v < n; ++v)
			if(coin(rng))
				edges.emplace_back(u, v);
	return domcrit::Graph(n, edges);
}

inline std::vector<domcrit::Vertex> random_permutation(std::mt19937_64 &rng, int n) {
	std::vector<domcrit::Vertex> perm(n);
	for(int i = 0; i < n; ++i)
		perm[i] = i;
	std::shuffle(perm.begin(), perm.end(), rng);
	return perm;
}

} // namespace testing
