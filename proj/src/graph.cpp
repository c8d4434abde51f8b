#include "epglab/graph.hpp"

#include <fstream>
#include <sstream>

namespace epglab {

int Graph::m() const {
    int total = 0;
    for (uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

VertexSet Graph::neighbors(int v) const { return mask_to_set(row(v)); }

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    return edges;
}

Graph induced_subgraph(const Graph& g, const VertexSet& verts) {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n() + b.n());
    for (auto [u, v] : edge_list(a)) h.add_edge(u, v);
    for (auto [u, v] : edge_list(b)) h.add_edge(a.n() + u, a.n() + v);
    return h;
}

namespace {

// strips comments/blank lines, returns content lines
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        size_t end = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(start, end - start + 1));
    }
    return lines;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::vector<std::string> lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty graph input");
    std::istringstream header(lines[0]);
    int n = -1, m = -1;
    if (!(header >> n >> m)) throw ParseError("bad graph header: " + lines[0]);
    std::string rest;
    if (header >> rest) throw ParseError("trailing tokens in header: " + lines[0]);
    if (n < 0) throw ParseError("negative vertex count");
    if (n > 64) throw GraphTooLarge(n);
    if (m < 0) throw ParseError("negative edge count");
    Graph g(n);
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream es(lines[i]);
        int u = -1, v = -1;
        if (!(es >> u >> v)) throw ParseError("bad edge line: " + lines[i]);
        if (es >> rest) throw ParseError("trailing tokens in edge line: " + lines[i]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range: " + lines[i]);
        if (u >= v) throw ParseError("edges must be written 'u v' with u < v: " + lines[i]);
        if (g.has_edge(u, v)) throw ParseError("duplicate edge: " + lines[i]);
        g.add_edge(u, v);
    }
    if (g.m() != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(g.m()));
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : edge_list(g)) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << format_graph(g);
}

}  // namespace epglab
