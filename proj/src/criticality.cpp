#include "domcrit/criticality.hpp"

#include <stdexcept>

namespace domcrit {

namespace {

int gamma_of(const Graph &g, GammaMemo *memo) {
	return memo ? memo->gamma(g) : gamma(g);
}

int gamma_without(const Graph &g, VertexSet xs, GammaMemo *memo) {
	return gamma_of(delete_vertices(g, xs).graph, memo);
}

VertexClass compare(int after, int before) {
	if(after < before)
		return VertexClass::minus;
	return after > before ? VertexClass::plus : VertexClass::zero;
}

VertexPartition partition_with_gamma(const Graph &g, int base, GammaMemo *memo) {
	VertexPartition p;
	for(Vertex x = 0; x < g.order(); ++x) {
		switch(compare(gamma_without(g, VertexSet::single(x), memo), base)) {
		case VertexClass::minus: p.minus.insert(x); break;
		case VertexClass::plus: p.plus.insert(x); break;
		case VertexClass::zero: p.zero.insert(x); break;
		}
	}
	return p;
}

bool bicritical_with_gamma(const Graph &g, int base, GammaMemo *memo) {
	for(Vertex x = 0; x < g.order(); ++x)
		for(Vertex y = x + 1; y < g.order(); ++y)
			if(gamma_without(g, VertexSet{x, y}, memo) >= base)
				return false;
	return true;
}

bool weak_bicritical_from(const Graph &g, const VertexPartition &p, GammaMemo *memo) {
	if(!p.plus.empty())
		return false;
	for(Vertex x : p.zero)
		if(!is_critical(delete_vertices(g, VertexSet::single(x)).graph, memo))
			return false;
	return true;
}

} // namespace

std::string_view to_string(VertexClass c) {
	switch(c) {
	case VertexClass::zero: return "zero";
	case VertexClass::plus: return "plus";
	case VertexClass::minus: return "minus";
	}
	return "?";
}

VertexClass classify_vertex(const Graph &g, Vertex x, GammaMemo *memo) {
	if(!g.contains(x))
		throw std::out_of_range("vertex out of range");
	return compare(gamma_without(g, VertexSet::single(x), memo), gamma_of(g, memo));
}

VertexPartition vertex_partition(const Graph &g, GammaMemo *memo) {
	return partition_with_gamma(g, gamma_of(g, memo), memo);
}

bool is_critical(const Graph &g, GammaMemo *memo) {
	int base = gamma_of(g, memo);
	for(Vertex x = 0; x < g.order(); ++x)
		if(gamma_without(g, VertexSet::single(x), memo) >= base)
			return false;
	return true;
}

bool is_k_critical(const Graph &g, int k, GammaMemo *memo) {
	return gamma_of(g, memo) == k && is_critical(g, memo);
}

bool is_bicritical(const Graph &g, GammaMemo *memo) {
	return bicritical_with_gamma(g, gamma_of(g, memo), memo);
}

bool is_weak_bicritical(const Graph &g, GammaMemo *memo) {
	return weak_bicritical_from(g, vertex_partition(g, memo), memo);
}

bool is_weak_bicritical(const Graph &g, const VertexPartition &p, GammaMemo *memo) {
	return weak_bicritical_from(g, p, memo);
}

bool is_weak_k_bicritical(const Graph &g, int k, GammaMemo *memo) {
	return gamma_of(g, memo) == k && is_weak_bicritical(g, memo);
}

CriticalityProfile criticality_profile(const Graph &g, GammaMemo *memo) {
	CriticalityProfile out;
	out.gamma = gamma_of(g, memo);
	out.partition = partition_with_gamma(g, out.gamma, memo);
	out.classes.resize(g.order());
	for(Vertex x = 0; x < g.order(); ++x) {
		out.classes[x] = out.partition.minus.contains(x) ? VertexClass::minus
			: out.partition.plus.contains(x)             ? VertexClass::plus
			                                             : VertexClass::zero;
	}
	out.is_critical = out.partition.minus == g.vertices();
	out.is_bicritical = bicritical_with_gamma(g, out.gamma, memo);
	out.is_weak_bicritical = weak_bicritical_from(g, out.partition, memo);
	out.degenerate = g.order() <= 2;
	return out;
}

std::vector<SufficientPair> find_sufficient_pairs(const Graph &g, int l, std::uint64_t budget) {
	if(l < 3)
		throw std::invalid_argument("sufficient pairs need l >= 3");
	if(!is_connected(g))
		throw std::invalid_argument("sufficient pairs are defined for connected graphs only");
	std::vector<SufficientPair> out;
	if(g.order() == 0)
		return out;

	auto sets = all_gamma_sets(g, budget);
	for(Vertex x : diametrical_vertices(g)) {
		auto layers = distance_layers(g, x);
		VertexSet within = layers[0] | (layers.size() > 1 ? layers[1] : VertexSet{});
		for(int j = 2; j < static_cast<int>(layers.size()); ++j) {
			within |= layers[j];
			for(VertexSet s : sets) {
				if(2 * (s & within).size() >= j + l) {
					out.push_back({x, j, l, s});
					break;
				}
			}
		}
	}
	return out;
}

std::vector<std::pair<Vertex, Vertex>> neighborhood_containment_pairs(const Graph &g) {
	std::vector<std::pair<Vertex, Vertex>> out;
	for(Vertex u = 0; u < g.order(); ++u)
		for(Vertex v = 0; v < g.order(); ++v)
			if(u != v && g.closed_neighbors(u).is_subset_of(g.closed_neighbors(v)))
				out.emplace_back(u, v);
	return out;
}

} // namespace domcrit
