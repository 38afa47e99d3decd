#include "domcrit/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "domcrit/isomorphism.hpp"

namespace domcrit {

namespace {

bool adjacency_less(const Graph &a, const Graph &b) {
	const auto &x = a.adjacency();
	const auto &y = b.adjacency();
	return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
		[](VertexSet s, VertexSet t) { return s.bits() < t.bits(); });
}

} // namespace

std::vector<Graph> extend_nonisomorphic(const std::vector<Graph> &previous, int jobs) {
	if(previous.empty())
		return {};
	int n = previous.front().order() + 1;
	if(n > max_order)
		throw std::invalid_argument("enumeration order exceeds vertex cap");
	jobs = std::max(1, jobs);

	std::vector<std::unordered_set<Graph, GraphHash>> found(jobs);
	auto work = [&](int id) {
		auto &seen = found[id];
		for(std::size_t p = id; p < previous.size(); p += jobs) {
			std::vector<VertexSet> adj = previous[p].adjacency();
			adj.emplace_back();
			for(std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
				std::vector<VertexSet> ext = adj;
				ext[n - 1] = VertexSet(mask);
				for(Vertex v : VertexSet(mask))
					ext[v].insert(n - 1);
				seen.insert(canonical_graph(Graph::trusted(std::move(ext))));
			}
		}
	};
	if(jobs == 1) {
		work(0);
	} else {
		std::vector<std::thread> pool;
		for(int id = 0; id < jobs; ++id)
			pool.emplace_back(work, id);
		for(auto &t : pool)
			t.join();
	}

	for(int id = 1; id < jobs; ++id)
		found[0].merge(found[id]);
	std::vector<Graph> out(found[0].begin(), found[0].end());
	std::sort(out.begin(), out.end(), adjacency_less);
	return out;
}

std::vector<Graph> nonisomorphic_graphs(int n, int jobs) {
	if(n < 0)
		throw std::invalid_argument("negative order");
	std::vector<Graph> reps{Graph(0)};
	for(int k = 1; k <= n; ++k)
		reps = extend_nonisomorphic(reps, jobs);
	return reps;
}

} // namespace domcrit
