#include "domcrit/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include "domcrit/graph_io.hpp"

namespace domcrit {

namespace {

using Cells = std::vector<std::uint64_t>;

class CanonicalSearch {
public:
	explicit CanonicalSearch(const Graph &g) : g_{g}, n_{g.order()} { }

	std::vector<Vertex> run() {
		if(n_ == 0)
			return {};
		Cells unit{VertexSet::range(n_).bits()};
		search(std::move(unit));
		return best_perm_;
	}

private:
	std::uint64_t nbr(Vertex v) const { return g_.neighbors(v).bits(); }

	// Splits every cell by neighbor count into each splitter until stable.
	// Fragments replace the cell in ascending count order, so the result is
	// determined by positions and counts alone.
	void refine(Cells &p) const {
		bool changed = true;
		while(changed) {
			changed = false;
			for(std::size_t s = 0; s < p.size(); ++s) {
				std::uint64_t splitter = p[s];
				for(std::size_t c = 0; c < p.size(); ++c) {
					std::uint64_t cell = p[c];
					if(std::popcount(cell) == 1)
						continue;
					std::array<std::uint64_t, max_order + 1> by_count{};
					int lo = max_order, hi = 0;
					for(std::uint64_t rest = cell; rest; rest &= rest - 1) {
						Vertex v = std::countr_zero(rest);
						int k = std::popcount(nbr(v) & splitter);
						by_count[k] |= std::uint64_t{1} << v;
						lo = std::min(lo, k);
						hi = std::max(hi, k);
					}
					if(lo == hi)
						continue;
					Cells fragments;
					for(int k = lo; k <= hi; ++k)
						if(by_count[k])
							fragments.push_back(by_count[k]);
					p[c] = fragments.front();
					p.insert(p.begin() + static_cast<std::ptrdiff_t>(c) + 1, fragments.begin() + 1, fragments.end());
					c += fragments.size() - 1;
					changed = true;
				}
			}
		}
	}

	bool twins(Vertex u, Vertex v) const {
		std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
		return (nbr(u) & ~bv) == (nbr(v) & ~bu);
	}

	void leaf(const Cells &p) {
		std::vector<Vertex> perm(n_);
		for(std::size_t i = 0; i < p.size(); ++i)
			perm[std::countr_zero(p[i])] = static_cast<Vertex>(i);
		std::vector<std::uint64_t> rows(n_, 0);
		for(Vertex u = 0; u < n_; ++u)
			for(std::uint64_t rest = nbr(u); rest; rest &= rest - 1)
				rows[perm[u]] |= std::uint64_t{1} << perm[std::countr_zero(rest)];
		if(best_perm_.empty() || less(rows, best_rows_)) {
			best_rows_ = std::move(rows);
			best_perm_ = std::move(perm);
		}
	}

	// Row-major bit-string order, column 0 first within a row.
	static bool less(const std::vector<std::uint64_t> &a, const std::vector<std::uint64_t> &b) {
		for(std::size_t i = 0; i < a.size(); ++i) {
			if(a[i] == b[i])
				continue;
			int low = std::countr_zero(a[i] ^ b[i]);
			return ((a[i] >> low) & 1) == 0;
		}
		return false;
	}

	void search(Cells p) {
		refine(p);
		auto target = std::find_if(p.begin(), p.end(), [](std::uint64_t c) { return std::popcount(c) > 1; });
		if(target == p.end()) {
			leaf(p);
			return;
		}
		std::size_t t = static_cast<std::size_t>(target - p.begin());
		std::uint64_t cell = p[t];
		std::vector<Vertex> tried;
		for(std::uint64_t rest = cell; rest; rest &= rest - 1) {
			Vertex v = std::countr_zero(rest);
			// Swapping twins is an automorphism fixing everything individualized so far.
			if(std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); }))
				continue;
			tried.push_back(v);
			Cells q = p;
			q[t] = std::uint64_t{1} << v;
			q.insert(q.begin() + static_cast<std::ptrdiff_t>(t) + 1, cell & ~(std::uint64_t{1} << v));
			search(std::move(q));
		}
	}

	const Graph &g_;
	int n_;
	std::vector<std::uint64_t> best_rows_;
	std::vector<Vertex> best_perm_;
};

} // namespace

std::vector<Vertex> canonical_labeling(const Graph &g) {
	return CanonicalSearch{g}.run();
}

Graph canonical_graph(const Graph &g) {
	return relabel(g, canonical_labeling(g));
}

std::string canonical_form(const Graph &g) {
	return to_graph6(canonical_graph(g));
}

bool are_isomorphic(const Graph &g, const Graph &h) {
	if(g.order() != h.order() || g.edge_count() != h.edge_count())
		return false;
	auto degrees = [](const Graph &x) {
		std::vector<int> d;
		for(Vertex v = 0; v < x.order(); ++v)
			d.push_back(x.degree(v));
		std::sort(d.begin(), d.end());
		return d;
	};
	if(degrees(g) != degrees(h))
		return false;
	return canonical_graph(g) == canonical_graph(h);
}

} // namespace domcrit
