#pragma once

// Reference computations that share no code with the library. Each one is
// deliberately naive so it can be trusted by inspection.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix_from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
	Matrix m(n, std::vector<char>(n, 0));
	for(auto [u, v] : edges)
		m[u][v] = m[v][u] = 1;
	return m;
}

// Smallest dominating set size by scanning all 2^n subsets.
inline int brute_gamma(const Matrix &adj) {
	int n = static_cast<int>(adj.size());
	int best = n;
	for(std::uint32_t mask = 0; mask < (1u << n); ++mask) {
		int size = __builtin_popcount(mask);
		if(size >= best)
			continue;
		bool ok = true;
		for(int v = 0; v < n && ok; ++v) {
			bool seen = (mask >> v) & 1;
			for(int u = 0; u < n && !seen; ++u)
				seen = ((mask >> u) & 1) && adj[u][v];
			ok = seen;
		}
		if(ok)
			best = size;
	}
	return best;
}

// Every dominating set of the given size as a sorted vertex list, lexicographic.
inline std::vector<std::vector<int>> brute_min_sets(const Matrix &adj, int size) {
	int n = static_cast<int>(adj.size());
	std::vector<std::vector<int>> out;
	for(std::uint32_t mask = 0; mask < (1u << n); ++mask) {
		if(__builtin_popcount(mask) != size)
			continue;
		bool ok = true;
		for(int v = 0; v < n && ok; ++v) {
			bool seen = (mask >> v) & 1;
			for(int u = 0; u < n && !seen; ++u)
				seen = ((mask >> u) & 1) && adj[u][v];
			ok = seen;
		}
		if(!ok)
			continue;
		std::vector<int> s;
		for(int v = 0; v < n; ++v)
			if((mask >> v) & 1)
				s.push_back(v);
		out.push_back(s);
	}
	std::sort(out.begin(), out.end());
	return out;
}

// Floyd-Warshall distances, -1 for unreachable pairs.
inline std::vector<std::vector<int>> all_distances(const Matrix &adj) {
	int n = static_cast<int>(adj.size());
	const int inf = 1 << 20;
	std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
	for(int u = 0; u < n; ++u)
		for(int v = 0; v < n; ++v)
			if(u == v)
				d[u][v] = 0;
			else if(adj[u][v])
				d[u][v] = 1;
	for(int w = 0; w < n; ++w)
		for(int u = 0; u < n; ++u)
			for(int v = 0; v < n; ++v)
				d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
	for(auto &row : d)
		for(int &x : row)
			if(x >= inf)
				x = -1;
	return d;
}

// Number of unlabeled graphs on n vertices by Burnside's lemma over cycle
// types: a permutation with cycle lengths l_1..l_r fixes 2^c graphs where
// c = sum floor(l_i / 2) + sum_{i<j} gcd(l_i, l_j).
inline std::uint64_t unlabeled_graph_count(int n) {
	if(n <= 1)
		return 1;
	std::uint64_t factorial = 1;
	for(int i = 2; i <= n; ++i)
		factorial *= i;
	std::uint64_t total = 0;
	std::vector<int> parts;
	std::function<void(int, int)> walk = [&](int rest, int max_part) {
		if(rest == 0) {
			// Permutations with this cycle type: n! / prod(l_i) / prod(mult_j!).
			std::uint64_t count = factorial;
			for(int l : parts)
				count /= l;
			for(std::size_t i = 0; i < parts.size();) {
				std::size_t j = i;
				while(j < parts.size() && parts[j] == parts[i])
					++j;
				for(std::size_t f = 2; f <= j - i; ++f)
					count /= f;
				i = j;
			}
			int c = 0;
			for(std::size_t i = 0; i < parts.size(); ++i) {
				c += parts[i] / 2;
				for(std::size_t j = i + 1; j < parts.size(); ++j)
					c += std::gcd(parts[i], parts[j]);
			}
			total += count << c;
			return;
		}
		for(int p = std::min(rest, max_part); p >= 1; --p) {
			parts.push_back(p);
			walk(rest - p, p);
			parts.pop_back();
		}
	};
	walk(n, n);
	return total / factorial;
}

// Connected counts from all-graph counts through the inverse Euler
// transform: n a_n = sum_{k=1..n} s_k a_{n-k} with s_k = sum_{d|k} d c_d.
inline std::vector<std::uint64_t> connected_counts(int n_max) {
	std::vector<std::int64_t> a(n_max + 1), s(n_max + 1, 0), c(n_max + 1, 0);
	for(int n = 0; n <= n_max; ++n)
		a[n] = static_cast<std::int64_t>(unlabeled_graph_count(n));
	for(int n = 1; n <= n_max; ++n) {
		std::int64_t sum = n * a[n];
		for(int k = 1; k < n; ++k)
			sum -= s[k] * a[n - k];
		s[n] = sum;
		std::int64_t rest = s[n];
		for(int d = 1; d < n; ++d)
			if(n % d == 0)
				rest -= d * c[d];
		c[n] = rest / n;
	}
	return std::vector<std::uint64_t>(c.begin(), c.end());
}

} // namespace oracle
