#include "domcrit/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "domcrit/criticality.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/isomorphism.hpp"

namespace domcrit {

void FkParams::validate() const {
	if(k < 2)
		throw std::invalid_argument("F_k needs k >= 2");
	if(static_cast<int>(m.size()) != k - 1)
		throw std::invalid_argument("F_k needs exactly k-1 block sizes");
	for(int mi : m)
		if(mi < 2)
			throw std::invalid_argument("F_k block sizes must be >= 2");
	if(order() > max_order)
		throw std::invalid_argument("F_k instance exceeds the vertex cap");
}

int FkParams::order() const {
	return 2 * std::accumulate(m.begin(), m.end(), 0) - (k - 2);
}

std::string_view to_string(Construction c) {
	switch(c) {
	case Construction::fk: return "Fk";
	case Construction::fstar2: return "Fstar2";
	case Construction::fpp3: return "Fpp3";
	case Construction::coalesced: return "Coalesced";
	}
	return "?";
}

std::string_view to_string(Fstar2Variant v) {
	switch(v) {
	case Fstar2Variant::matching: return "matching";
	case Fstar2Variant::matching_plus_k3: return "matching+K3";
	case Fstar2Variant::matching_plus_p3: return "matching+P3";
	}
	return "?";
}

Fstar2Variant parse_fstar2_variant(std::string_view name) {
	if(name == "matching")
		return Fstar2Variant::matching;
	if(name == "matching+K3" || name == "k3" || name == "K3")
		return Fstar2Variant::matching_plus_k3;
	if(name == "matching+P3" || name == "p3" || name == "P3")
		return Fstar2Variant::matching_plus_p3;
	throw std::invalid_argument("unknown F*_2 variant '" + std::string(name) + "'");
}

std::string_view to_string(StarShape s) {
	switch(s) {
	case StarShape::fstar2: return "Fstar2";
	case StarShape::fk: return "Fk";
	case StarShape::fpp3: return "Fpp3";
	case StarShape::coalesced: return "Coalesced";
	}
	return "?";
}

namespace {

std::string join(const std::vector<int> &xs) {
	std::string out;
	for(std::size_t i = 0; i < xs.size(); ++i)
		out += (i ? "," : "") + std::to_string(xs[i]);
	return out;
}

std::vector<Vertex> diametrical_pair(const Graph &g) {
	auto diam = diameter(g);
	if(!diam || g.order() == 0)
		return {};
	for(Vertex u = 0; u < g.order(); ++u) {
		auto layers = distance_layers(g, u);
		if(static_cast<int>(layers.size()) - 1 == *diam)
			return {u, layers.back().first()};
	}
	return {};
}

// Endpoints, cut vertices and identifiable set of a freshly built instance.
void finish(FamilyInstance &inst) {
	if(inst.endpoints.empty())
		inst.endpoints = diametrical_pair(inst.graph);
	if(inst.construction != Construction::fk)
		inst.cut_vertices = cut_vertices(inst.graph).to_vector();
	inst.identifiable = identifiable_vertices(inst.graph, inst.k);
}

Graph matching_complement(int pairs) {
	return complement(copies(complete_graph(2), pairs));
}

} // namespace

FamilyInstance build_fk(const FkParams &params) {
	params.validate();
	// Local vertices 0 and 1 of each block are the non-adjacent pair u_i, v_i.
	Graph chain = matching_complement(params.m[0]);
	std::vector<Vertex> cuts;
	Vertex last_v = 1;
	for(std::size_t i = 1; i < params.m.size(); ++i) {
		auto glued = coalesce(chain, last_v, matching_complement(params.m[i]), 0);
		cuts.push_back(last_v);
		last_v = glued.map2[1];
		chain = std::move(glued.graph);
	}

	FamilyInstance inst;
	inst.graph = std::move(chain);
	inst.k = params.k;
	inst.construction = Construction::fk;
	inst.m = params.m;
	inst.endpoints = {0, last_v};
	inst.cut_vertices = cuts;
	inst.description = "F" + std::to_string(params.k) + "(" + join(params.m) + ")";
	finish(inst);
	return inst;
}

FamilyInstance build_fstar2(Fstar2Variant variant, int m) {
	if(m < 1)
		throw std::invalid_argument("F*_2 members need m >= 1");
	FamilyInstance inst;
	switch(variant) {
	case Fstar2Variant::matching:
		inst.graph = matching_complement(m + 1);
		break;
	case Fstar2Variant::matching_plus_k3:
		inst.graph = complement(disjoint_union({copies(complete_graph(2), m), complete_graph(3)}));
		break;
	case Fstar2Variant::matching_plus_p3:
		inst.graph = complement(disjoint_union({copies(complete_graph(2), m), path_graph(3)}));
		break;
	}
	inst.k = 2;
	inst.construction = Construction::fstar2;
	inst.m = {m};
	inst.variant = static_cast<int>(variant);
	inst.description = "Fstar2:" + std::string(to_string(variant)) + "(" + std::to_string(m) + ")";
	finish(inst);
	return inst;
}

FamilyInstance build_fpp3(int m1, int m2, int variant) {
	if(variant != 1 && variant != 2)
		throw std::invalid_argument("F''_3 variant must be 1 or 2");
	FamilyInstance base = build_fk(FkParams{3, {m1, m2}});
	Vertex u = base.cut_vertices.front();
	Vertex twin = base.graph.order();

	std::vector<VertexSet> adj = base.graph.adjacency();
	adj.push_back(base.graph.neighbors(u));
	for(Vertex w : base.graph.neighbors(u))
		adj[w].insert(twin);
	if(variant == 2) {
		adj[u].insert(twin);
		adj[twin].insert(u);
	}

	FamilyInstance inst;
	inst.graph = Graph::from_adjacency(std::move(adj));
	inst.k = 3;
	inst.construction = Construction::fpp3;
	inst.m = {m1, m2};
	inst.variant = variant;
	inst.endpoints = base.endpoints;
	inst.description = "G" + std::to_string(variant) + "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
	finish(inst);
	return inst;
}

FamilyInstance build_fstar_k(const FamilyInstance &h1, Vertex u1, const FamilyInstance &h2, Vertex x2) {
	if(h1.construction != Construction::fk)
		throw std::invalid_argument("first part must be an F_k member");
	if(h1.k < 2 || h2.k < 2)
		throw std::invalid_argument("both parts need k >= 2");
	if(!h1.graph.contains(u1) || !diametrical_vertices(h1.graph).contains(u1))
		throw std::invalid_argument("attach vertex " + std::to_string(u1) + " is not diametrical in the F_k part");
	if(!h2.graph.contains(x2) || !identifiable_vertices(h2).contains(x2))
		throw std::invalid_argument("attach vertex " + std::to_string(x2) + " is not identifiable in the F*_k part");

	auto glued = coalesce(h1.graph, u1, h2.graph, x2);
	FamilyInstance inst;
	inst.graph = std::move(glued.graph);
	inst.k = h1.k + h2.k - 1;
	inst.construction = Construction::coalesced;
	inst.description = "[" + h1.description + "@" + std::to_string(u1) + " + " + h2.description + "@" + std::to_string(x2) + "]";
	finish(inst);
	return inst;
}

VertexSet identifiable_vertices(const Graph &g, int k) {
	VertexSet critical = vertex_partition(g).minus;
	if(k <= 2)
		return critical;
	return critical & diametrical_vertices(g);
}

VertexSet identifiable_vertices(const FamilyInstance &inst) {
	return identifiable_vertices(inst.graph, inst.k);
}

namespace {

void push_unique(std::vector<FamilyInstance> &out, std::unordered_set<std::string> &seen, FamilyInstance inst) {
	if(seen.insert(canonical_form(inst.graph)).second)
		out.push_back(std::move(inst));
}

void m_vectors(int slots, int budget, std::vector<int> &prefix, const std::function<void(const std::vector<int> &)> &emit) {
	if(slots == 0) {
		emit(prefix);
		return;
	}
	// Each remaining slot needs at least 4 vertices' worth of budget.
	for(int mi = 2; 2 * mi + 2 * 2 * (slots - 1) <= budget; ++mi) {
		prefix.push_back(mi);
		m_vectors(slots - 1, budget - 2 * mi, prefix, emit);
		prefix.pop_back();
	}
}

} // namespace

int min_fstar_order(int k) {
	// C4 for k = 2; each further unit of k costs a C4 glued at one vertex.
	return 4 + 3 * (k - 2);
}

std::vector<FamilyInstance> enumerate_fk(int k, int order_limit) {
	if(k < 2)
		throw std::invalid_argument("F_k needs k >= 2");
	std::vector<FamilyInstance> out;
	std::unordered_set<std::string> seen;
	order_limit = std::min(order_limit, max_order);
	// Sum of 2 m_i is bounded by order_limit + (k - 2).
	std::vector<int> prefix;
	m_vectors(k - 1, order_limit + (k - 2), prefix, [&](const std::vector<int> &m) {
		push_unique(out, seen, build_fk(FkParams{k, m}));
	});
	return out;
}

std::vector<FamilyInstance> enumerate_fstar_k(int k, int order_limit) {
	if(k < 2)
		throw std::invalid_argument("F*_k needs k >= 2");
	std::vector<FamilyInstance> out;
	std::unordered_set<std::string> seen;
	order_limit = std::min(order_limit, max_order);

	if(k == 2) {
		for(int m = 1; 2 * m + 2 <= order_limit; ++m)
			push_unique(out, seen, build_fstar2(Fstar2Variant::matching, m));
		for(int m = 1; 2 * m + 3 <= order_limit; ++m) {
			push_unique(out, seen, build_fstar2(Fstar2Variant::matching_plus_k3, m));
			push_unique(out, seen, build_fstar2(Fstar2Variant::matching_plus_p3, m));
		}
		return out;
	}

	for(auto &inst : enumerate_fk(k, order_limit))
		push_unique(out, seen, std::move(inst));
	if(k == 3) {
		for(int m1 = 2; 2 * (m1 + 2) <= order_limit; ++m1)
			for(int m2 = 2; 2 * (m1 + m2) <= order_limit; ++m2)
				for(int variant : {1, 2})
					push_unique(out, seen, build_fpp3(m1, m2, variant));
	}
	for(int k1 = 2; k1 <= k - 1; ++k1) {
		int k2 = k - k1 + 1;
		int room = order_limit - min_fstar_order(k2) + 1;
		if(room < 4)
			continue;
		auto lower = enumerate_fstar_k(k2, order_limit - 3);
		for(const auto &h1 : enumerate_fk(k1, room)) {
			VertexSet attach1 = diametrical_vertices(h1.graph);
			for(const auto &h2 : lower) {
				if(h1.graph.order() + h2.graph.order() - 1 > order_limit)
					continue;
				for(Vertex u1 : attach1)
					for(Vertex x2 : h2.identifiable)
						push_unique(out, seen, build_fstar_k(h1, u1, h2, x2));
			}
		}
	}
	return out;
}

std::optional<FkRecognition> recognize_fk(const Graph &g) {
	if(g.order() < 4 || !is_connected(g))
		return std::nullopt;
	auto bl = blocks(g);
	for(VertexSet b : bl) {
		if(b.size() < 4 || b.size() % 2 != 0)
			return std::nullopt;
		for(Vertex v : b)
			if((g.neighbors(v) & b).size() != b.size() - 2)
				return std::nullopt;
	}
	auto partner = [&](VertexSet b, Vertex v) {
		return (b - g.closed_neighbors(v)).first();
	};

	FkRecognition rec;
	if(bl.size() == 1) {
		rec.params = FkParams{2, {bl[0].size() / 2}};
		rec.chain = bl;
		rec.endpoints = {0, partner(bl[0], 0)};
		return rec;
	}

	VertexSet cuts = cut_vertices(g);
	std::vector<VertexSet> cuts_in(bl.size());
	std::vector<int> ends;
	for(std::size_t i = 0; i < bl.size(); ++i) {
		cuts_in[i] = bl[i] & cuts;
		if(cuts_in[i].size() == 1)
			ends.push_back(static_cast<int>(i));
		else if(cuts_in[i].size() != 2)
			return std::nullopt;
	}
	if(ends.size() != 2)
		return std::nullopt;
	for(Vertex c : cuts) {
		int hits = 0;
		for(VertexSet b : bl)
			hits += b.contains(c);
		if(hits != 2)
			return std::nullopt;
	}

	// Walk from the end block holding the smallest vertex.
	int cur = VertexSet::lex_less(bl[ends[1]], bl[ends[0]]) ? ends[1] : ends[0];
	std::vector<bool> used(bl.size(), false);
	Vertex entry = -1;
	for(;;) {
		used[cur] = true;
		rec.chain.push_back(bl[cur]);
		VertexSet exits = cuts_in[cur];
		if(entry >= 0)
			exits.erase(entry);
		if(exits.empty())
			break;
		Vertex exit = exits.first();
		if(entry >= 0 && g.adjacent(entry, exit))
			return std::nullopt;
		rec.cut_vertices.push_back(exit);
		int next = -1;
		for(std::size_t i = 0; i < bl.size(); ++i)
			if(!used[i] && bl[i].contains(exit))
				next = static_cast<int>(i);
		if(next < 0)
			return std::nullopt;
		entry = exit;
		cur = next;
	}
	if(rec.chain.size() != bl.size())
		return std::nullopt;

	rec.endpoints = {partner(rec.chain.front(), rec.cut_vertices.front()), partner(rec.chain.back(), rec.cut_vertices.back())};
	std::vector<int> m;
	for(VertexSet b : rec.chain)
		m.push_back(b.size() / 2);
	std::vector<int> reversed(m.rbegin(), m.rend());
	if(reversed < m) {
		std::reverse(rec.chain.begin(), rec.chain.end());
		std::reverse(rec.cut_vertices.begin(), rec.cut_vertices.end());
		std::reverse(rec.endpoints.begin(), rec.endpoints.end());
		m = reversed;
	}
	rec.params = FkParams{static_cast<int>(m.size()) + 1, m};
	return rec;
}

namespace {

std::optional<StarCertificate> fstar2_shape(const Graph &g) {
	Graph co = complement(g);
	int pairs = 0, k3 = 0, p3 = 0;
	for(VertexSet c : components(co)) {
		auto h = induced_subgraph(co, c).graph;
		if(h.order() == 2)
			++pairs;
		else if(h.order() == 3 && h.edge_count() == 3)
			++k3;
		else if(h.order() == 3 && h.edge_count() == 2)
			++p3;
		else
			return std::nullopt;
	}
	StarCertificate cert;
	cert.shape = StarShape::fstar2;
	cert.k = 2;
	if(k3 == 0 && p3 == 0 && pairs >= 2) {
		cert.variant = static_cast<int>(Fstar2Variant::matching);
		cert.m = {pairs - 1};
	} else if(k3 == 1 && p3 == 0 && pairs >= 1) {
		cert.variant = static_cast<int>(Fstar2Variant::matching_plus_k3);
		cert.m = {pairs};
	} else if(k3 == 0 && p3 == 1 && pairs >= 1) {
		cert.variant = static_cast<int>(Fstar2Variant::matching_plus_p3);
		cert.m = {pairs};
	} else {
		return std::nullopt;
	}
	return cert;
}

std::optional<StarCertificate> fpp3_shape(const Graph &g) {
	for(Vertex u = 0; u < g.order(); ++u) {
		for(Vertex t = u + 1; t < g.order(); ++t) {
			if((g.neighbors(u) - VertexSet::single(t)) != (g.neighbors(t) - VertexSet::single(u)))
				continue;
			for(auto [keep, drop] : {std::pair{u, t}, std::pair{t, u}}) {
				auto rest = delete_vertices(g, VertexSet::single(drop));
				auto rec = recognize_fk(rest.graph);
				if(!rec || rec->params.k != 3 || rec->cut_vertices.front() != *rest.image_of(keep))
					continue;
				StarCertificate cert;
				cert.shape = StarShape::fpp3;
				cert.k = 3;
				cert.m = rec->params.m;
				cert.variant = g.adjacent(u, t) ? 2 : 1;
				cert.cut = keep;
				cert.twin = drop;
				return cert;
			}
		}
	}
	return std::nullopt;
}

std::optional<StarCertificate> recognize_star(const Graph &g, int k);

std::optional<StarCertificate> coalesced_shape(const Graph &g, int k) {
	for(Vertex x : cut_vertices(g)) {
		auto lifted = delete_vertices(g, VertexSet::single(x));
		std::vector<VertexSet> parts;
		for(VertexSet c : components(lifted.graph)) {
			VertexSet orig;
			for(Vertex v : c)
				orig.insert(lifted.map[v]);
			parts.push_back(orig);
		}
		int c = static_cast<int>(parts.size());
		for(unsigned mask = 1; mask + 1 < (1u << c); ++mask) {
			VertexSet side_f = VertexSet::single(x), side_s = VertexSet::single(x);
			for(int i = 0; i < c; ++i)
				((mask >> i) & 1 ? side_f : side_s) |= parts[i];

			auto hf = induced_subgraph(g, side_f);
			auto fk = recognize_fk(hf.graph);
			if(!fk)
				continue;
			Vertex xf = *hf.image_of(x);
			if(!diametrical_vertices(hf.graph).contains(xf))
				continue;
			int k2 = k - fk->params.k + 1;
			if(k2 < 2)
				continue;
			auto hs = induced_subgraph(g, side_s);
			auto star = recognize_star(hs.graph, k2);
			if(!star)
				continue;
			if(!identifiable_vertices(hs.graph, k2).contains(*hs.image_of(x)))
				continue;

			StarCertificate cert;
			cert.shape = StarShape::coalesced;
			cert.k = k;
			cert.attach = x;
			cert.fk_side = side_f;
			cert.fstar_side = side_s;
			StarCertificate fk_cert;
			fk_cert.shape = StarShape::fk;
			fk_cert.k = fk->params.k;
			fk_cert.m = fk->params.m;
			cert.parts = {fk_cert, *star};
			return cert;
		}
	}
	return std::nullopt;
}

// Membership in F*_k for a prescribed k.
std::optional<StarCertificate> recognize_star(const Graph &g, int k) {
	if(k < 2 || g.order() < 4 || !is_connected(g))
		return std::nullopt;
	if(diameter(g) != 2 * k - 2 || gamma(g) != k)
		return std::nullopt;
	if(k == 2)
		return fstar2_shape(g);
	if(auto fk = recognize_fk(g); fk && fk->params.k == k) {
		StarCertificate cert;
		cert.shape = StarShape::fk;
		cert.k = k;
		cert.m = fk->params.m;
		return cert;
	}
	if(k == 3)
		if(auto cert = fpp3_shape(g))
			return cert;
	return coalesced_shape(g, k);
}

} // namespace

std::optional<StarCertificate> recognize_fstar_k(const Graph &g) {
	if(g.order() < 4 || !is_connected(g))
		return std::nullopt;
	return recognize_star(g, gamma(g));
}

std::string describe(const StarCertificate &cert) {
	switch(cert.shape) {
	case StarShape::fstar2:
		return "Fstar2:" + std::string(to_string(static_cast<Fstar2Variant>(cert.variant))) + "(" + join(cert.m) + ")";
	case StarShape::fk:
		return "F" + std::to_string(cert.k) + "(" + join(cert.m) + ")";
	case StarShape::fpp3:
		return "G" + std::to_string(cert.variant) + "(" + join(cert.m) + ")";
	case StarShape::coalesced:
		return "[" + describe(cert.parts[0]) + " + " + describe(cert.parts[1]) + " @" + std::to_string(cert.attach) + "]";
	}
	return "?";
}

} // namespace domcrit
