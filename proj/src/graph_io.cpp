#include "domcrit/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace domcrit {

GraphFormat parse_format(std::string_view name) {
	if(name == "graph6" || name == "g6")
		return GraphFormat::graph6;
	if(name == "edgelist" || name == "edge-list")
		return GraphFormat::edge_list;
	throw ParseError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) {
	return f == GraphFormat::graph6 ? "graph6" : "edgelist";
}

std::string to_graph6(const Graph &g) {
	int n = g.order();
	std::string out;
	if(n <= 62) {
		out.push_back(static_cast<char>(n + 63));
	} else {
		out.push_back('~');
		for(int shift = 12; shift >= 0; shift -= 6)
			out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
	}
	int acc = 0, nbits = 0;
	for(Vertex j = 1; j < n; ++j) {
		for(Vertex i = 0; i < j; ++i) {
			acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
			if(++nbits == 6) {
				out.push_back(static_cast<char>(acc + 63));
				acc = nbits = 0;
			}
		}
	}
	if(nbits > 0)
		out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
	return out;
}

Graph from_graph6(std::string_view line) {
	while(!line.empty() && (line.back() == '\n' || line.back() == '\r'))
		line.remove_suffix(1);
	if(line.starts_with(">>graph6<<"))
		line.remove_prefix(10);
	if(line.empty())
		throw ParseError("graph6: empty input");
	for(char c : line)
		if(c < 63 || c > 126)
			throw ParseError("graph6: invalid character");

	std::size_t pos = 0;
	int n = 0;
	if(line[0] != '~') {
		n = line[0] - 63;
		pos = 1;
	} else {
		if(line.size() < 4 || line[1] == '~')
			throw ParseError("graph6: malformed size header");
		for(std::size_t k = 1; k <= 3; ++k)
			n = (n << 6) | (line[k] - 63);
		pos = 4;
	}
	if(n > max_order)
		throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(max_order));

	std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
	std::size_t expected = (bits + 5) / 6;
	if(line.size() - pos != expected)
		throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, got " + std::to_string(line.size() - pos));

	std::vector<VertexSet> adj(n);
	std::size_t k = 0;
	for(Vertex j = 1; j < n; ++j) {
		for(Vertex i = 0; i < j; ++i, ++k) {
			int byte = line[pos + k / 6] - 63;
			if((byte >> (5 - k % 6)) & 1) {
				adj[i].insert(j);
				adj[j].insert(i);
			}
		}
	}
	return Graph::trusted(std::move(adj));
}

std::string to_edge_list(const Graph &g) {
	std::ostringstream out;
	out << "n " << g.order() << '\n';
	for(auto [u, v] : g.edges())
		out << u << ' ' << v << '\n';
	return out.str();
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while(i < line.size()) {
		while(i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
			++i;
		std::size_t j = i;
		while(j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
			++j;
		if(j > i)
			out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

int to_int(std::string_view tok, int line_no) {
	int value = 0;
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if(ec != std::errc{} || ptr != tok.data() + tok.size())
		throw ParseError("edge list line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
	return value;
}

} // namespace

Graph from_edge_list(std::string_view text) {
	int n = -1;
	std::set<Edge> edges;
	int line_no = 0;
	while(!text.empty()) {
		++line_no;
		std::size_t eol = text.find('\n');
		std::string_view line = text.substr(0, eol);
		text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
		if(auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		auto tok = tokens(line);
		if(tok.empty())
			continue;
		if(n < 0) {
			if(tok.size() != 2 || tok[0] != "n")
				throw ParseError("edge list line " + std::to_string(line_no) + ": expected header 'n <count>'");
			n = to_int(tok[1], line_no);
			if(n < 0 || n > max_order)
				throw ParseError("edge list: order " + std::to_string(n) + " outside [0, " + std::to_string(max_order) + "]");
			continue;
		}
		if(tok.size() != 2)
			throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
		int u = to_int(tok[0], line_no), v = to_int(tok[1], line_no);
		if(u < 0 || u >= n || v < 0 || v >= n)
			throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range");
		if(u == v)
			throw ParseError("edge list line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
		edges.emplace(std::min(u, v), std::max(u, v));
	}
	if(n < 0)
		throw ParseError("edge list: missing header 'n <count>'");
	std::vector<Edge> list(edges.begin(), edges.end());
	return Graph(n, list);
}

std::vector<Graph> read_graphs(std::istream &in, GraphFormat format) {
	std::vector<Graph> out;
	if(format == GraphFormat::edge_list) {
		std::ostringstream buf;
		buf << in.rdbuf();
		out.push_back(from_edge_list(buf.str()));
		return out;
	}
	std::string line;
	while(std::getline(in, line)) {
		while(!line.empty() && (line.back() == '\r' || line.back() == ' '))
			line.pop_back();
		if(line.empty())
			continue;
		out.push_back(from_graph6(line));
	}
	return out;
}

std::string write_graph(const Graph &g, GraphFormat format) {
	return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

} // namespace domcrit
