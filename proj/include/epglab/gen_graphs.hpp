#ifndef EPGLAB_GEN_GRAPHS_HPP
#define EPGLAB_GEN_GRAPHS_HPP

#include <functional>
#include <unordered_map>

#include "epglab/graph.hpp"

namespace epglab {

// Collects graphs up to isomorphism.  Buckets by a folded invariant key and
// settles bucket collisions with an exact isomorphism test.
class IsoStore {
public:
    bool insert(const Graph& g);  // true when no stored graph is isomorphic to g
    const std::vector<Graph>& graphs() const { return graphs_; }
    std::vector<Graph> take() { return std::move(graphs_); }

private:
    std::unordered_map<uint64_t, std::vector<int>> buckets_;
    std::vector<Graph> graphs_;
};

// Connected graphs on exactly n vertices, one representative per isomorphism
// class.  Built level by level: every connected graph arises from a connected
// graph one vertex smaller by adding a vertex with a nonempty neighborhood
// (delete any non-cut vertex to go down).
std::vector<Graph> connected_graphs(int n);

// Connected chordal graphs on exactly n vertices, one per class.  Extension
// step attaches the new vertex to a nonempty clique, which preserves
// chordality; deleting a simplicial vertex goes back down.
std::vector<Graph> connected_chordal_graphs(int n);

// Runs fn on every connected (resp. connected chordal) graph with 1..nmax
// vertices, one per isomorphism class.
void for_each_connected_graph(int nmax, const std::function<void(const Graph&)>& fn);
void for_each_connected_chordal(int nmax, const std::function<void(const Graph&)>& fn);

// nonempty cliques of g as bit masks, each exactly once
void for_each_clique(const Graph& g, const std::function<void(uint64_t)>& fn);

}  // namespace epglab

#endif
