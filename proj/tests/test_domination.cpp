#include "doctest.h"

#include <random>
#include <thread>

#include "domcrit/domination.hpp"
#include "domcrit/families.hpp"
#include "helpers.hpp"

using namespace domcrit;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<VertexSet> &sets) {
	std::vector<std::vector<int>> out;
	for(VertexSet s : sets)
		out.push_back(s.to_vector());
	return out;
}

} // namespace

TEST_CASE("is_dominating_set") {
	Graph p3 = path_graph(3);
	CHECK(is_dominating_set(p3, p3.vertices()));
	CHECK(is_dominating_set(p3, {1}));
	CHECK_FALSE(is_dominating_set(p3, {0}));
	for(Vertex v = 0; v < 4; ++v)
		CHECK_FALSE(is_dominating_set(cycle_graph(4), VertexSet::single(v)));
	CHECK_THROWS(is_dominating_set(p3, {3}));
}

TEST_CASE("domination number examples") {
	for(int n = 1; n <= 9; ++n)
		CHECK(gamma(complete_graph(n)) == 1);
	for(int m = 2; m <= 6; ++m)
		CHECK(gamma(complement(copies(complete_graph(2), m))) == 2);
	CHECK(gamma(path_graph(7)) == 3);
	CHECK(gamma(Graph(0)) == 0);
	CHECK(gamma(empty_graph(5)) == 5);
	Graph g22 = build_fk({3, {2, 2}}).graph;
	CHECK(gamma(g22) == 3);
	auto r = domination_number(g22);
	CHECK(r.witness.size() == 3);
	CHECK(is_dominating_set(g22, r.witness));
}

TEST_CASE("gamma-set enumeration") {
	CHECK(as_lists(all_gamma_sets(complete_graph(3))) == std::vector<std::vector<int>>{{0}, {1}, {2}});
	CHECK(as_lists(all_gamma_sets(path_graph(3))) == std::vector<std::vector<int>>{{1}});
	// Every pair of C4 dominates: each vertex covers itself and both neighbors.
	auto c4 = all_gamma_sets(cycle_graph(4));
	CHECK(c4.size() == 6);
	CHECK(as_lists(c4) == oracle::brute_min_sets(testing::to_matrix(cycle_graph(4)), 2));
	// gamma(P30) = 10 and C(30, 10) is about 3 * 10^7.
	CHECK_THROWS_AS(all_gamma_sets(path_graph(30)), BudgetExceeded);
	CHECK_THROWS_AS(all_gamma_sets(cycle_graph(4), 2, 5), BudgetExceeded);
	CHECK(all_gamma_sets(cycle_graph(4), 2, 6).size() == 6);
	auto full = domination_with_all_sets(path_graph(4));
	REQUIRE(full.all_min_sets);
	CHECK(full.all_min_sets->size() == oracle::brute_min_sets(testing::to_matrix(path_graph(4)), 2).size());
}

TEST_CASE("gamma after deletion") {
	Graph c4 = cycle_graph(4);
	CHECK(gamma_after_delete(c4, {}) == 2);
	CHECK(gamma_after_delete(c4, {0}) == 1);
	auto g22 = build_fk({3, {2, 2}});
	REQUIRE(g22.cut_vertices.size() == 1);
	CHECK(gamma_after_delete(g22.graph, VertexSet::single(g22.cut_vertices[0])) == 2);
}

TEST_CASE("branch and bound matches the subset oracle on random graphs") {
	std::mt19937_64 rng{101};
	for(int trial = 0; trial < 1500; ++trial) {
		int n = static_cast<int>(rng() % 11);
		double p = (rng() % 100) / 100.0;
		Graph g = testing::random_graph(rng, n, p);
		auto m = testing::to_matrix(g);
		int expected = oracle::brute_gamma(m);
		auto r = domination_number(g);
		REQUIRE(r.gamma == expected);
		CHECK(r.witness.size() == expected);
		CHECK(is_dominating_set(g, r.witness));
		if(n <= 8) {
			auto sets = all_gamma_sets(g);
			CHECK(as_lists(sets) == oracle::brute_min_sets(m, expected));
		}
	}
}

TEST_CASE("deletion, coalescence and edge monotonicity bounds") {
	std::mt19937_64 rng{202};
	for(int trial = 0; trial < 200; ++trial) {
		Graph g = testing::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.35);
		int base = gamma(g);
		for(Vertex x : g.vertices())
			CHECK(gamma_after_delete(g, VertexSet::single(x)) >= base - 1);
		auto es = complement(g).edges();
		if(!es.empty()) {
			auto [u, v] = es[rng() % es.size()];
			CHECK(gamma(g.with_edge(u, v)) <= base);
		}
		Graph h = testing::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
		Vertex x1 = static_cast<Vertex>(rng() % g.order()), x2 = static_cast<Vertex>(rng() % h.order());
		if(g.degree(x1) == 0 || h.degree(x2) == 0)
			continue;
		int gg = gamma(coalesce(g, x1, h, x2).graph);
		CHECK(gg >= base + gamma(h) - 1);
		CHECK(gg <= base + gamma(h));
	}
}

TEST_CASE("gamma memo is safe under concurrent use") {
	GammaMemo memo;
	std::vector<Graph> graphs;
	std::mt19937_64 rng{303};
	for(int i = 0; i < 64; ++i)
		graphs.push_back(testing::random_graph(rng, 9, 0.3));
	std::vector<int> results(graphs.size() * 4);
	std::vector<std::thread> pool;
	for(int t = 0; t < 4; ++t)
		pool.emplace_back([&, t] {
			for(std::size_t i = 0; i < graphs.size(); ++i)
				results[t * graphs.size() + i] = memo.gamma(graphs[i]);
		});
	for(auto &th : pool)
		th.join();
	for(std::size_t i = 0; i < graphs.size(); ++i)
		for(int t = 0; t < 4; ++t)
			CHECK(results[t * graphs.size() + i] == gamma(graphs[i]));
	CHECK(memo.size() <= graphs.size());
}
