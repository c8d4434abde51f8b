#ifndef EPGLAB_GRAPH_ALGOS_HPP
#define EPGLAB_GRAPH_ALGOS_HPP

#include <array>
#include <optional>

#include "epglab/graph.hpp"

namespace epglab {

// --- cliques and coloring ---

bool is_clique(const Graph& g, uint64_t mask);

// Bron-Kerbosch with pivoting; each clique sorted ascending, the list sorted
// lexicographically so output is deterministic.
std::vector<VertexSet> maximal_cliques(const Graph& g);
VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

// --- connectivity ---

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
// is there an s-t path whose vertices all lie inside `allowed`?
bool connected_within(const Graph& g, uint64_t allowed, int s, int t);

bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

// --- chordality ---

struct Chordality {
    bool chordal = false;
    std::vector<int> peo;   // perfect elimination order when chordal
    std::vector<int> hole;  // an induced cycle of length >= 4 otherwise
};
Chordality check_chordal(const Graph& g);

// Three pairwise nonadjacent vertices such that each pair is joined by a path
// avoiding the closed neighborhood of the third.  Returns the lexicographically
// least such triple.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g);

// --- blocks ---

struct Blocks {
    std::vector<VertexSet> blocks;  // vertex sets of the biconnected components
    VertexSet cut_vertices;
};
Blocks biconnected_blocks(const Graph& g);

// --- induced subgraphs ---

// Injective map of pattern vertices preserving adjacency and nonadjacency.
// Pattern vertices are mapped in id order trying host vertices ascending, so
// the returned image sequence is lexicographically least.
std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern);
bool contains_induced(const Graph& host, const Graph& pattern);

// Chordless cycle with at least min_len vertices (min_len >= 4); when odd_only
// is set, only odd lengths close.  Empty optional when none exists.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_len,
                                                   bool odd_only);

// --- isomorphism ---

bool is_isomorphic(const Graph& a, const Graph& b);

// Isomorphism-invariant bucket key (color refinement signature).  Equal keys
// do not prove isomorphism; unequal keys disprove it.
std::vector<uint64_t> invariant_key(const Graph& g);

// Canonically relabeled copy: isomorphic graphs map to equal results.  Search
// cost grows with the automorphism group, fine for the small graphs here.
Graph canonical_form(const Graph& g);

}  // namespace epglab

#endif
