#ifndef EPGLAB_TREE_MODEL_HPP
#define EPGLAB_TREE_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

// Paths in a host tree; vertices meet either on nodes or on edges.
struct TreeRep {
    Graph host;                           // a tree on host.n() nodes
    std::vector<std::vector<int>> paths;  // ordered node sequence per vertex

    int n() const { return static_cast<int>(paths.size()); }
};

// throws RangeError when host is not a tree or some path is not a path in it
void validate_tree_rep(const TreeRep& tr);

// vertices adjacent when their paths share a node (share_edge false) or a
// host edge (share_edge true)
Graph tree_intersection_graph(const TreeRep& tr, bool share_edge);

// Text format:
//   host 4
//   0 1
//   1 2
//   1 3
//   paths 2
//   0 : 0 1 3
//   1 : 2 1
TreeRep parse_tree_rep(std::istream& in);
TreeRep parse_tree_rep(const std::string& text);
std::string format_tree_rep(const TreeRep& tr);
TreeRep load_tree_rep(const std::string& path);
void save_tree_rep(const TreeRep& tr, const std::string& path);

// all trees on `nodes` unlabeled nodes, one labeled representative each
const std::vector<Graph>& trees_with(int nodes);

enum class TreeVerdict { found, exhausted };

struct TreeSearch {
    TreeVerdict verdict = TreeVerdict::exhausted;
    TreeRep rep;         // valid when found
    int host_bound = 0;  // largest host size tried
};

// Assign every vertex a path in some host tree with at most max_host_nodes
// nodes so that adjacency matches node sharing (or edge sharing).  Hosts are
// tried smallest first, so a found model has the fewest possible nodes.
TreeSearch search_tree_rep(const Graph& g, bool share_edge, int max_host_nodes);

// Node-sharing model for a chordal graph from a clique tree in which every
// vertex's cliques line up along a path; empty when no such tree exists.
// Throws std::invalid_argument on non-chordal input.  The host has one node
// per maximal clique (plus one per extra component link), so at most n nodes.
std::optional<TreeRep> vpt_rep_chordal(const Graph& g);

// chordal and every component admits a clique path tree
bool is_vpt(const Graph& g);

}  // namespace epglab

#endif
