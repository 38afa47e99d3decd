#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace domcrit {

using Vertex = int;

inline constexpr int max_order = 64;

// Subset of {0, ..., 63} packed into one machine word.
class VertexSet {
public:
	constexpr VertexSet() = default;
	constexpr explicit VertexSet(std::uint64_t bits) : bits_{bits} { }
	constexpr VertexSet(std::initializer_list<Vertex> vs) {
		for(Vertex v : vs)
			insert(v);
	}

	static constexpr VertexSet range(int n) {
		return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
	}
	static constexpr VertexSet single(Vertex v) {
		return VertexSet(std::uint64_t{1} << v);
	}
	static VertexSet from(const std::vector<Vertex> &vs) {
		VertexSet s;
		for(Vertex v : vs)
			s.insert(v);
		return s;
	}

	constexpr std::uint64_t bits() const { return bits_; }
	constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1; }
	constexpr bool empty() const { return bits_ == 0; }
	constexpr int size() const { return std::popcount(bits_); }
	constexpr Vertex first() const { return std::countr_zero(bits_); }

	constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
	constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

	constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
	constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

	constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
	constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
	constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
	constexpr VertexSet &operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
	constexpr VertexSet &operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
	constexpr VertexSet &operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

	constexpr bool operator==(const VertexSet &) const = default;

	// Ordered by the sorted member lists, lexicographically.
	static bool lex_less(VertexSet a, VertexSet b) {
		while(!a.empty() && !b.empty()) {
			Vertex x = a.first(), y = b.first();
			if(x != y)
				return x < y;
			a.erase(x);
			b.erase(y);
		}
		return a.empty() && !b.empty();
	}

	std::vector<Vertex> to_vector() const {
		std::vector<Vertex> out;
		out.reserve(size());
		for(Vertex v : *this)
			out.push_back(v);
		return out;
	}

	struct iterator {
		std::uint64_t rest;
		constexpr Vertex operator*() const { return std::countr_zero(rest); }
		constexpr iterator &operator++() {
			rest &= rest - 1;
			return *this;
		}
		constexpr bool operator!=(const iterator &o) const { return rest != o.rest; }
		constexpr bool operator==(const iterator &o) const { return rest == o.rest; }
	};
	constexpr iterator begin() const { return {bits_}; }
	constexpr iterator end() const { return {0}; }

private:
	std::uint64_t bits_ = 0;
};

} // namespace domcrit
