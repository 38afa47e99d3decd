#include "doctest.h"

#include "domcrit/criticality.hpp"
#include "domcrit/enumeration.hpp"
#include "domcrit/families.hpp"
#include "helpers.hpp"

using namespace domcrit;

namespace {

Graph matching_complement(int m, std::optional<Graph> extra = std::nullopt) {
	std::vector<Graph> parts(m, complete_graph(2));
	if(extra)
		parts.push_back(*extra);
	return complement(disjoint_union(parts));
}

} // namespace

TEST_CASE("vertex classes") {
	for(Vertex v = 0; v < 4; ++v)
		CHECK(classify_vertex(cycle_graph(4), v) == VertexClass::minus);
	CHECK(classify_vertex(complete_graph(2), 0) == VertexClass::zero);
	CHECK(classify_vertex(star_graph(3), 0) == VertexClass::plus);
	CHECK(classify_vertex(star_graph(3), 1) == VertexClass::zero);
	CHECK_THROWS(classify_vertex(complete_graph(2), 2));

	auto p = vertex_partition(path_graph(3));
	CHECK(p.plus == VertexSet{1});
	CHECK(p.zero == VertexSet{0, 2});
	CHECK(p.minus.empty());
}

TEST_CASE("critical and bicritical examples") {
	CHECK(is_critical(cycle_graph(4)));
	CHECK(is_k_critical(cycle_graph(4), 2));
	CHECK_FALSE(is_k_critical(cycle_graph(4), 3));
	CHECK_FALSE(is_critical(path_graph(3)));
	CHECK(is_k_critical(build_fk({3, {2, 2}}).graph, 3));

	CHECK(criticality_profile(complete_graph(2)).is_bicritical);
	CHECK(criticality_profile(complete_graph(2)).degenerate);
	CHECK_FALSE(criticality_profile(complete_graph(3)).degenerate);
	CHECK_FALSE(is_bicritical(cycle_graph(4)));
	CHECK_FALSE(is_bicritical(complete_graph(4)));
}

TEST_CASE("weak bicritical examples") {
	Graph g = matching_complement(1, complete_graph(3));
	CHECK(is_weak_bicritical(g));
	CHECK(is_weak_k_bicritical(g, 2));
	CHECK_FALSE(is_weak_bicritical(path_graph(3)));
	CHECK(is_weak_bicritical(cycle_graph(4)));
	CHECK(is_weak_bicritical(g, vertex_partition(g)) == is_weak_bicritical(g));
}

TEST_CASE("profile invariants over every graph on at most 6 vertices") {
	std::vector<Graph> reps{Graph(0)};
	for(int n = 1; n <= 6; ++n) {
		reps = extend_nonisomorphic(reps);
		for(const Graph &g : reps) {
			auto p = criticality_profile(g);
			CHECK(p.partition.zero.size() + p.partition.plus.size() + p.partition.minus.size() == n);
			CHECK(!p.partition.zero.intersects(p.partition.plus));
			CHECK(!p.partition.zero.intersects(p.partition.minus));
			CHECK(p.is_critical == (p.partition.minus == g.vertices()));
			if(p.is_critical || p.is_bicritical)
				CHECK(p.is_weak_bicritical);
			if(p.is_weak_bicritical) {
				CHECK(p.partition.plus.empty());
				for(Vertex x : p.partition.zero) {
					Graph h = delete_vertices(g, VertexSet::single(x)).graph;
					CHECK(gamma(h) == p.gamma);
					CHECK(is_critical(h));
				}
			}
			for(Vertex x : p.partition.minus)
				CHECK(gamma_after_delete(g, VertexSet::single(x)) == p.gamma - 1);
		}
	}
}

TEST_CASE("sufficient pairs") {
	CHECK(find_sufficient_pairs(complete_graph(2), 3).empty());
	CHECK(find_sufficient_pairs(cycle_graph(4), 3).empty());
	CHECK_THROWS_AS(find_sufficient_pairs(cycle_graph(4), 2), std::invalid_argument);
	CHECK_THROWS_AS(find_sufficient_pairs(empty_graph(2), 3), std::invalid_argument);

	// Recheck the definition on short paths with oracle distances.
	for(int n = 3; n <= 8; ++n) {
		Graph g = path_graph(n);
		auto d = oracle::all_distances(testing::to_matrix(g));
		auto sets = all_gamma_sets(g);
		for(int l = 3; l <= 4; ++l) {
			auto pairs = find_sufficient_pairs(g, l);
			for(Vertex x : diametrical_vertices(g)) {
				for(int j = 2; j <= n - 1; ++j) {
					bool exists = false;
					for(VertexSet s : sets) {
						int near = 0;
						for(Vertex v : s)
							near += d[x][v] <= j;
						exists = exists || 2 * near >= j + l;
					}
					bool listed = std::any_of(pairs.begin(), pairs.end(), [&](const SufficientPair &p) { return p.x == x && p.j == j; });
					CHECK(listed == exists);
				}
			}
		}
	}
}

TEST_CASE("neighborhood containment") {
	CHECK(neighborhood_containment_pairs(complete_graph(3)).size() == 6);
	CHECK(neighborhood_containment_pairs(cycle_graph(4)).empty());
	auto p3 = neighborhood_containment_pairs(path_graph(3));
	CHECK(p3 == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 1}});
}
