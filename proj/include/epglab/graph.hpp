#ifndef EPGLAB_GRAPH_HPP
#define EPGLAB_GRAPH_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace epglab {

// Undirected simple graph on at most 64 vertices.  Adjacency is one 64-bit
// row per vertex, which keeps neighborhood intersections and subset tests
// single instructions; everything in this library lives well below the cap.
struct GraphTooLarge : std::runtime_error {
    explicit GraphTooLarge(int n)
        : std::runtime_error("graph has " + std::to_string(n) +
                             " vertices, limit is 64") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

using VertexSet = std::vector<int>;  // kept sorted ascending

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > 64) throw GraphTooLarge(n);
    }

    int n() const { return n_; }
    int m() const;

    void add_edge(int u, int v) {
        check(u); check(v);
        assert(u != v);
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
    void remove_edge(int u, int v) {
        check(u); check(v);
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }
    bool has_edge(int u, int v) const {
        check(u); check(v);
        return (adj_[u] >> v) & 1u;
    }

    // open / closed neighborhoods as bit rows
    uint64_t row(int v) const { check(v); return adj_[v]; }
    uint64_t closed_row(int v) const { return row(v) | bit(v); }
    int degree(int v) const { return std::popcount(row(v)); }
    VertexSet neighbors(int v) const;

    uint64_t all_mask() const {
        return n_ == 64 ? ~uint64_t{0} : (bit(n_) - 1);
    }

    bool operator==(const Graph&) const = default;

private:
    static uint64_t bit(int v) { return uint64_t{1} << v; }
    void check(int v) const { assert(0 <= v && v < n_); (void)v; }

    int n_ = 0;
    std::vector<uint64_t> adj_;
};

inline VertexSet mask_to_set(uint64_t mask) {
    VertexSet s;
    while (mask) {
        int v = std::countr_zero(mask);
        s.push_back(v);
        mask &= mask - 1;
    }
    return s;
}

inline uint64_t set_to_mask(const VertexSet& s) {
    uint64_t m = 0;
    for (int v : s) m |= uint64_t{1} << v;
    return m;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g);

// vertices of `verts` renumbered 0..k-1 in the given (sorted) order
Graph induced_subgraph(const Graph& g, const VertexSet& verts);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Text format: a "n m" header line, then one "u v" line per edge with
// 0 <= u < v < n.  Blank lines and '#' comments are ignored.  format_graph
// emits edges sorted, so parse/format round-trips are byte exact.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace epglab

#endif
