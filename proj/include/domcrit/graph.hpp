#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "domcrit/vertex_set.hpp"

namespace domcrit {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1, one neighbor word per vertex.
class Graph {
public:
	Graph() = default;
	explicit Graph(int n);
	Graph(int n, std::span<const Edge> edges);
	Graph(int n, std::initializer_list<Edge> edges)
	: Graph(n, std::span<const Edge>(edges.begin(), edges.size())) { }

	// Validates symmetry, irreflexivity and range.
	static Graph from_adjacency(std::vector<VertexSet> adj);
	// Caller guarantees the invariants; used by internal constructions.
	static Graph trusted(std::vector<VertexSet> adj) {
		Graph g;
		g.adj_ = std::move(adj);
		return g;
	}

	int order() const { return static_cast<int>(adj_.size()); }
	int edge_count() const;
	VertexSet vertices() const { return VertexSet::range(order()); }
	VertexSet neighbors(Vertex v) const { return adj_[v]; }
	VertexSet closed_neighbors(Vertex v) const { return adj_[v] | VertexSet::single(v); }
	bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
	int degree(Vertex v) const { return adj_[v].size(); }
	int min_degree() const;
	int max_degree() const;
	std::vector<Edge> edges() const;

	bool contains(Vertex v) const { return v >= 0 && v < order(); }
	bool contains(VertexSet s) const { return s.is_subset_of(vertices()); }

	Graph with_edge(Vertex u, Vertex v) const;
	Graph without_edge(Vertex u, Vertex v) const;

	const std::vector<VertexSet> &adjacency() const { return adj_; }

	bool operator==(const Graph &) const = default;

private:
	std::vector<VertexSet> adj_;
};

struct GraphHash {
	std::size_t operator()(const Graph &g) const noexcept;
};

// Vertices of the result are relabeled order-preservingly; map[i] is the
// original vertex behind new vertex i.
struct InducedSubgraph {
	Graph graph;
	std::vector<Vertex> map;

	std::optional<Vertex> image_of(Vertex original) const;
	VertexSet image_of(VertexSet originals) const;
};

struct CoalescenceResult {
	Graph graph;
	Vertex merged_vertex;
	std::vector<Vertex> map1;
	std::vector<Vertex> map2;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

Graph complement(const Graph &g);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);
Graph copies(const Graph &h, int s);

InducedSubgraph induced_subgraph(const Graph &g, VertexSet keep);
InducedSubgraph delete_vertices(const Graph &g, VertexSet xs);

// perm[old] = new.
Graph relabel(const Graph &g, std::span<const Vertex> perm);

// x1 keeps its index in the result; the rest of h2 is appended after h1.
CoalescenceResult coalesce(const Graph &h1, Vertex x1, const Graph &h2, Vertex x2);

// nullopt encodes an infinite distance.
std::optional<int> distance(const Graph &g, Vertex u, Vertex v);
VertexSet distance_layer(const Graph &g, Vertex x, int i);
// BFS layers from x up to its eccentricity within its component.
std::vector<VertexSet> distance_layers(const Graph &g, Vertex x);
std::optional<int> eccentricity(const Graph &g, Vertex x);
std::optional<int> diameter(const Graph &g);
VertexSet diametrical_vertices(const Graph &g);

bool is_connected(const Graph &g);
VertexSet component_of(const Graph &g, Vertex x);
std::vector<VertexSet> components(const Graph &g);
VertexSet cut_vertices(const Graph &g);
std::vector<VertexSet> blocks(const Graph &g);

} // namespace domcrit
