#include "domcrit/domination.hpp"

#include <algorithm>
#include <string>

namespace domcrit {

bool is_dominating_set(const Graph &g, VertexSet s) {
	if(!g.contains(s))
		throw std::out_of_range("candidate set not contained in graph");
	VertexSet covered;
	for(Vertex v : s)
		covered |= g.closed_neighbors(v);
	return covered == g.vertices();
}

namespace {

class StagedSearch {
public:
	StagedSearch(const Graph &g, VertexSet component) : g_{g}, component_{component} {
		for(Vertex v : component)
			max_closed_ = std::max(max_closed_, g.degree(v) + 1);
	}

	VertexSet solve() {
		int n = component_.size();
		for(int k = (n + max_closed_ - 1) / max_closed_; k <= n; ++k) {
			if(dfs(component_, VertexSet{}, k))
				return found_;
		}
		return component_;
	}

private:
	bool dfs(VertexSet undominated, VertexSet chosen, int remaining) {
		if(undominated.empty()) {
			found_ = chosen;
			return true;
		}
		if(remaining == 0 || remaining * max_closed_ < undominated.size())
			return false;
		Vertex v = undominated.first();
		for(Vertex c : g_.closed_neighbors(v)) {
			VertexSet next = chosen;
			next.insert(c);
			if(dfs(undominated - g_.closed_neighbors(c), next, remaining - 1))
				return true;
		}
		return false;
	}

	const Graph &g_;
	VertexSet component_;
	int max_closed_ = 1;
	VertexSet found_;
};

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
	if(k < 0 || k > n)
		return 0;
	k = std::min(k, n - k);
	std::uint64_t r = 1;
	for(int i = 1; i <= k; ++i) {
		// r * (n - k + i) / i stays exact at each step
		unsigned __int128 next = static_cast<unsigned __int128>(r) * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
		if(next > cap)
			return cap + 1;
		r = static_cast<std::uint64_t>(next);
	}
	return r;
}

} // namespace

DominationResult domination_number(const Graph &g) {
	DominationResult out;
	for(VertexSet c : components(g))
		out.witness |= StagedSearch{g, c}.solve();
	out.gamma = out.witness.size();
	return out;
}

int gamma(const Graph &g) {
	return domination_number(g).gamma;
}

std::vector<VertexSet> all_gamma_sets(const Graph &g, int gamma, std::uint64_t budget) {
	int n = g.order();
	std::uint64_t count = binomial_capped(n, gamma, budget);
	if(count > budget)
		throw BudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(gamma) + ") candidate sets exceed budget " + std::to_string(budget));

	std::vector<VertexSet> out;
	if(gamma < 0 || gamma > n)
		return out;
	std::vector<Vertex> idx(gamma);
	for(int i = 0; i < gamma; ++i)
		idx[i] = i;
	for(;;) {
		VertexSet s = VertexSet::from(idx);
		if(is_dominating_set(g, s))
			out.push_back(s);
		int i = gamma - 1;
		while(i >= 0 && idx[i] == n - gamma + i)
			--i;
		if(i < 0)
			break;
		++idx[i];
		for(int j = i + 1; j < gamma; ++j)
			idx[j] = idx[j - 1] + 1;
	}
	return out;
}

std::vector<VertexSet> all_gamma_sets(const Graph &g, std::uint64_t budget) {
	return all_gamma_sets(g, gamma(g), budget);
}

DominationResult domination_with_all_sets(const Graph &g, std::uint64_t budget) {
	DominationResult out = domination_number(g);
	out.all_min_sets = all_gamma_sets(g, out.gamma, budget);
	return out;
}

int gamma_after_delete(const Graph &g, VertexSet xs) {
	return gamma(delete_vertices(g, xs).graph);
}

int GammaMemo::gamma(const Graph &g) {
	{
		std::shared_lock lock{mutex_};
		if(auto it = table_.find(g); it != table_.end())
			return it->second;
	}
	int value = domcrit::gamma(g);
	std::unique_lock lock{mutex_};
	table_.emplace(g, value);
	return value;
}

std::size_t GammaMemo::size() const {
	std::shared_lock lock{mutex_};
	return table_.size();
}

} // namespace domcrit
