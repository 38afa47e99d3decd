#include "domcrit/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace domcrit {

namespace {

void check_order(int n) {
	if(n < 0)
		throw std::invalid_argument("negative vertex count");
	if(n > max_order)
		throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds " + std::to_string(max_order));
}

void check_vertex(const Graph &g, Vertex v) {
	if(!g.contains(v))
		throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
}

} // namespace

Graph::Graph(int n) {
	check_order(n);
	adj_.assign(n, VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
	for(auto [u, v] : edges) {
		if(u < 0 || u >= n || v < 0 || v >= n)
			throw std::out_of_range("edge endpoint out of range");
		if(u == v)
			throw std::invalid_argument("loop at vertex " + std::to_string(u));
		adj_[u].insert(v);
		adj_[v].insert(u);
	}
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
	int n = static_cast<int>(adj.size());
	check_order(n);
	VertexSet all = VertexSet::range(n);
	for(Vertex u = 0; u < n; ++u) {
		if(!adj[u].is_subset_of(all))
			throw std::invalid_argument("neighbor out of range at vertex " + std::to_string(u));
		if(adj[u].contains(u))
			throw std::invalid_argument("loop at vertex " + std::to_string(u));
		for(Vertex v : adj[u])
			if(!adj[v].contains(u))
				throw std::invalid_argument("asymmetric adjacency");
	}
	return trusted(std::move(adj));
}

int Graph::edge_count() const {
	int twice = 0;
	for(VertexSet s : adj_)
		twice += s.size();
	return twice / 2;
}

int Graph::min_degree() const {
	int d = order() == 0 ? 0 : max_order;
	for(VertexSet s : adj_)
		d = std::min(d, s.size());
	return d;
}

int Graph::max_degree() const {
	int d = 0;
	for(VertexSet s : adj_)
		d = std::max(d, s.size());
	return d;
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	for(Vertex u = 0; u < order(); ++u)
		for(Vertex v : adj_[u] - VertexSet::range(u + 1))
			out.emplace_back(u, v);
	return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
	check_vertex(*this, u);
	check_vertex(*this, v);
	if(u == v)
		throw std::invalid_argument("loop at vertex " + std::to_string(u));
	auto adj = adj_;
	adj[u].insert(v);
	adj[v].insert(u);
	return trusted(std::move(adj));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
	check_vertex(*this, u);
	check_vertex(*this, v);
	auto adj = adj_;
	adj[u].erase(v);
	adj[v].erase(u);
	return trusted(std::move(adj));
}

std::size_t GraphHash::operator()(const Graph &g) const noexcept {
	std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(g.order());
	for(VertexSet s : g.adjacency()) {
		h ^= s.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
	}
	return static_cast<std::size_t>(h);
}

std::optional<Vertex> InducedSubgraph::image_of(Vertex original) const {
	auto it = std::lower_bound(map.begin(), map.end(), original);
	if(it == map.end() || *it != original)
		return std::nullopt;
	return static_cast<Vertex>(it - map.begin());
}

VertexSet InducedSubgraph::image_of(VertexSet originals) const {
	VertexSet out;
	for(Vertex v : originals)
		if(auto w = image_of(v))
			out.insert(*w);
	return out;
}

Graph empty_graph(int n) {
	return Graph(n);
}

Graph complete_graph(int n) {
	check_order(n);
	std::vector<VertexSet> adj(n);
	for(Vertex v = 0; v < n; ++v)
		adj[v] = VertexSet::range(n) - VertexSet::single(v);
	return Graph::trusted(std::move(adj));
}

Graph path_graph(int n) {
	check_order(n);
	std::vector<VertexSet> adj(n);
	for(Vertex v = 0; v + 1 < n; ++v) {
		adj[v].insert(v + 1);
		adj[v + 1].insert(v);
	}
	return Graph::trusted(std::move(adj));
}

Graph cycle_graph(int n) {
	if(n < 3)
		throw std::invalid_argument("cycle needs at least 3 vertices");
	return path_graph(n).with_edge(0, n - 1);
}

Graph star_graph(int leaves) {
	check_order(leaves + 1);
	std::vector<VertexSet> adj(leaves + 1);
	for(Vertex v = 1; v <= leaves; ++v) {
		adj[0].insert(v);
		adj[v].insert(0);
	}
	return Graph::trusted(std::move(adj));
}

Graph complement(const Graph &g) {
	int n = g.order();
	std::vector<VertexSet> adj(n);
	for(Vertex v = 0; v < n; ++v)
		adj[v] = g.vertices() - g.closed_neighbors(v);
	return Graph::trusted(std::move(adj));
}

Graph disjoint_union(std::span<const Graph> parts) {
	int total = 0;
	for(const Graph &h : parts)
		total += h.order();
	check_order(total);
	std::vector<VertexSet> adj;
	adj.reserve(total);
	int offset = 0;
	for(const Graph &h : parts) {
		for(VertexSet s : h.adjacency())
			adj.emplace_back(s.bits() << offset);
		offset += h.order();
	}
	return Graph::trusted(std::move(adj));
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
	return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph copies(const Graph &h, int s) {
	if(s < 0)
		throw std::invalid_argument("negative copy count");
	std::vector<Graph> parts(s, h);
	return disjoint_union(parts);
}

InducedSubgraph induced_subgraph(const Graph &g, VertexSet keep) {
	if(!g.contains(keep))
		throw std::out_of_range("vertex set not contained in graph");
	InducedSubgraph out;
	out.map = keep.to_vector();
	std::vector<int> index(g.order(), -1);
	for(std::size_t i = 0; i < out.map.size(); ++i)
		index[out.map[i]] = static_cast<int>(i);
	std::vector<VertexSet> adj(out.map.size());
	for(std::size_t i = 0; i < out.map.size(); ++i)
		for(Vertex w : g.neighbors(out.map[i]) & keep)
			adj[i].insert(index[w]);
	out.graph = Graph::trusted(std::move(adj));
	return out;
}

InducedSubgraph delete_vertices(const Graph &g, VertexSet xs) {
	if(!g.contains(xs))
		throw std::out_of_range("deleted vertex out of range");
	return induced_subgraph(g, g.vertices() - xs);
}

Graph relabel(const Graph &g, std::span<const Vertex> perm) {
	int n = g.order();
	if(static_cast<int>(perm.size()) != n)
		throw std::invalid_argument("permutation size mismatch");
	std::vector<VertexSet> adj(n);
	for(Vertex u = 0; u < n; ++u)
		for(Vertex v : g.neighbors(u))
			adj[perm[u]].insert(perm[v]);
	return Graph::trusted(std::move(adj));
}

CoalescenceResult coalesce(const Graph &h1, Vertex x1, const Graph &h2, Vertex x2) {
	check_vertex(h1, x1);
	check_vertex(h2, x2);
	int n1 = h1.order(), n2 = h2.order();
	check_order(n1 + n2 - 1);

	CoalescenceResult out;
	out.merged_vertex = x1;
	out.map1.resize(n1);
	for(Vertex v = 0; v < n1; ++v)
		out.map1[v] = v;
	out.map2.resize(n2);
	Vertex next = n1;
	for(Vertex v = 0; v < n2; ++v)
		out.map2[v] = v == x2 ? x1 : next++;

	std::vector<VertexSet> adj(n1 + n2 - 1);
	for(Vertex v = 0; v < n1; ++v)
		adj[v] = h1.neighbors(v);
	for(Vertex v = 0; v < n2; ++v)
		for(Vertex w : h2.neighbors(v))
			adj[out.map2[v]].insert(out.map2[w]);
	out.graph = Graph::trusted(std::move(adj));
	return out;
}

std::vector<VertexSet> distance_layers(const Graph &g, Vertex x) {
	check_vertex(g, x);
	std::vector<VertexSet> layers{VertexSet::single(x)};
	VertexSet seen = layers.front();
	for(;;) {
		VertexSet next;
		for(Vertex v : layers.back())
			next |= g.neighbors(v);
		next -= seen;
		if(next.empty())
			break;
		seen |= next;
		layers.push_back(next);
	}
	return layers;
}

std::optional<int> distance(const Graph &g, Vertex u, Vertex v) {
	check_vertex(g, v);
	auto layers = distance_layers(g, u);
	for(std::size_t i = 0; i < layers.size(); ++i)
		if(layers[i].contains(v))
			return static_cast<int>(i);
	return std::nullopt;
}

VertexSet distance_layer(const Graph &g, Vertex x, int i) {
	if(i < 0)
		throw std::invalid_argument("negative layer index");
	auto layers = distance_layers(g, x);
	return i < static_cast<int>(layers.size()) ? layers[i] : VertexSet{};
}

std::optional<int> eccentricity(const Graph &g, Vertex x) {
	auto layers = distance_layers(g, x);
	VertexSet reached;
	for(VertexSet l : layers)
		reached |= l;
	if(reached != g.vertices())
		return std::nullopt;
	return static_cast<int>(layers.size()) - 1;
}

std::optional<int> diameter(const Graph &g) {
	int best = 0;
	for(Vertex v = 0; v < g.order(); ++v) {
		auto e = eccentricity(g, v);
		if(!e)
			return std::nullopt;
		best = std::max(best, *e);
	}
	return best;
}

VertexSet diametrical_vertices(const Graph &g) {
	auto diam = diameter(g);
	if(!diam)
		throw std::invalid_argument("diametrical vertices of a disconnected graph");
	VertexSet out;
	for(Vertex v = 0; v < g.order(); ++v)
		if(eccentricity(g, v) == diam)
			out.insert(v);
	return out;
}

VertexSet component_of(const Graph &g, Vertex x) {
	VertexSet out;
	for(VertexSet l : distance_layers(g, x))
		out |= l;
	return out;
}

bool is_connected(const Graph &g) {
	return g.order() <= 1 || component_of(g, 0) == g.vertices();
}

std::vector<VertexSet> components(const Graph &g) {
	std::vector<VertexSet> out;
	VertexSet rest = g.vertices();
	while(!rest.empty()) {
		VertexSet c = component_of(g, rest.first());
		out.push_back(c);
		rest -= c;
	}
	return out;
}

namespace {

struct BiconnectedDecomposition {
	VertexSet cut;
	std::vector<VertexSet> blocks;
};

BiconnectedDecomposition biconnected(const Graph &g) {
	if(!is_connected(g))
		throw std::invalid_argument("block decomposition of a disconnected graph");
	int n = g.order();
	BiconnectedDecomposition out;
	if(n == 0)
		return out;
	if(n == 1) {
		out.blocks.push_back(VertexSet::single(0));
		return out;
	}

	std::vector<int> disc(n, -1), low(n, 0);
	std::vector<Edge> stack;
	int time = 0;
	std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
		disc[u] = low[u] = time++;
		int children = 0;
		for(Vertex v : g.neighbors(u)) {
			if(disc[v] < 0) {
				++children;
				stack.emplace_back(u, v);
				dfs(v, u);
				low[u] = std::min(low[u], low[v]);
				if(low[v] >= disc[u]) {
					if(parent >= 0)
						out.cut.insert(u);
					VertexSet block;
					for(;;) {
						Edge e = stack.back();
						stack.pop_back();
						block.insert(e.first);
						block.insert(e.second);
						if(e == Edge{u, v})
							break;
					}
					out.blocks.push_back(block);
				}
			} else if(v != parent && disc[v] < disc[u]) {
				stack.emplace_back(u, v);
				low[u] = std::min(low[u], disc[v]);
			}
		}
		if(parent < 0 && children > 1)
			out.cut.insert(u);
	};
	dfs(0, -1);
	std::sort(out.blocks.begin(), out.blocks.end(), VertexSet::lex_less);
	return out;
}

} // namespace

VertexSet cut_vertices(const Graph &g) {
	return biconnected(g).cut;
}

std::vector<VertexSet> blocks(const Graph &g) {
	return biconnected(g).blocks;
}

} // namespace domcrit
