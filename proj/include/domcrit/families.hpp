#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

// Chain of k-1 blocks, block i isomorphic to the complement of m[i] K2.
struct FkParams {
	int k = 2;
	std::vector<int> m;

	void validate() const;
	int order() const;
	bool operator==(const FkParams &) const = default;
};

enum class Construction { fk, fstar2, fpp3, coalesced };
enum class Fstar2Variant { matching, matching_plus_k3, matching_plus_p3 };

std::string_view to_string(Construction c);
std::string_view to_string(Fstar2Variant v);
Fstar2Variant parse_fstar2_variant(std::string_view name);

struct FamilyInstance {
	Graph graph;
	int k = 0;
	Construction construction = Construction::fk;
	// fk: the m-vector; fstar2: {m}; fpp3: {m1, m2}; coalesced: empty.
	std::vector<int> m;
	// fstar2: the Fstar2Variant index; fpp3: 1 or 2.
	int variant = 0;
	// Two vertices at distance diam(graph); u_1 and v_{k-1} for fk.
	std::vector<Vertex> endpoints;
	// Chain order for fk, ascending otherwise.
	std::vector<Vertex> cut_vertices;
	VertexSet identifiable;
	std::string description;
};

FamilyInstance build_fk(const FkParams &params);
FamilyInstance build_fstar2(Fstar2Variant variant, int m);
// variant 1 adds a false twin u' of the cut vertex u of G(m1, m2); variant 2
// also joins u and u'.
FamilyInstance build_fpp3(int m1, int m2, int variant);
// Glues a diametrical vertex u1 of an F_{k1} member onto an identifiable
// vertex x2 of an F*_{k2} member.
FamilyInstance build_fstar_k(const FamilyInstance &h1, Vertex u1, const FamilyInstance &h2, Vertex x2);

// Critical vertices when k = 2; critical and diametrical vertices when k >= 3.
VertexSet identifiable_vertices(const Graph &g, int k);
VertexSet identifiable_vertices(const FamilyInstance &inst);

// Smallest order of an F*_k member: 4 + 3(k - 2).
int min_fstar_order(int k);

// Members of order <= order_limit, one per isomorphism class.
std::vector<FamilyInstance> enumerate_fk(int k, int order_limit);
std::vector<FamilyInstance> enumerate_fstar_k(int k, int order_limit);

struct FkRecognition {
	FkParams params;
	// Blocks in chain order.
	std::vector<VertexSet> chain;
	std::vector<Vertex> cut_vertices;
	std::vector<Vertex> endpoints;
};

// Structural test: the block-cut tree is a path of complement-of-matching
// blocks glued at non-adjacent vertices. The chain is oriented so the
// m-vector is the lexicographically smaller of its two readings.
std::optional<FkRecognition> recognize_fk(const Graph &g);

enum class StarShape { fstar2, fk, fpp3, coalesced };
std::string_view to_string(StarShape s);

// Parse tree of an F*_k membership proof.
struct StarCertificate {
	StarShape shape = StarShape::fk;
	int k = 0;
	std::vector<int> m;
	int variant = 0;
	// fpp3: the twin pair, u the cut vertex of the remaining F_3 member.
	Vertex cut = -1;
	Vertex twin = -1;
	// coalesced: the attach vertex and both sides as vertex sets of the graph.
	Vertex attach = -1;
	VertexSet fk_side;
	VertexSet fstar_side;
	// coalesced: {F_{k1} side, F*_{k2} side}.
	std::vector<StarCertificate> parts;
};

std::string describe(const StarCertificate &cert);

std::optional<StarCertificate> recognize_fstar_k(const Graph &g);

} // namespace domcrit
