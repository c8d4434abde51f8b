#ifndef EPGLAB_CERTIFICATES_HPP
#define EPGLAB_CERTIFICATES_HPP

#include <array>
#include <string>
#include <vector>

#include "epglab/catalog.hpp"
#include "epglab/graph.hpp"

namespace epglab {

// Branch graph of a clique C: vertices are the outside neighbors of C, and
// two of them are joined when they are nonadjacent in g, share a neighbor
// inside C, and neither one's neighborhood inside C contains the other's.
struct BranchGraph {
    Graph graph;     // on branch vertices renumbered 0..k-1
    VertexSet verts;  // original ids; verts[i] names branch vertex i
};
BranchGraph branch_graph(const Graph& g, const VertexSet& clique);

// An asteroidal triple inside a neighborhood.  No graph representable by
// single-bend grid paths has one, so each certificate refutes membership.
struct NeighborhoodAtCert {
    int vertex = 0;
    std::array<int, 3> triple{};  // original vertex ids
};
std::vector<NeighborhoodAtCert> check_neighborhood_at(const Graph& g);

// Branch graphs of representable graphs have no induced cycle of length >= 4,
// no induced six-vertex path, and chromatic number at most three.  Each
// violation found is reported with the clique and a witness.
struct BranchCert {
    enum class Kind { cycle, long_path, big_chromatic };
    Kind kind = Kind::cycle;
    VertexSet clique;
    std::vector<int> witness;  // original ids: the cycle / path, or all branch
                               // vertices for a chromatic violation
    int chromatic = 0;         // set for big_chromatic
};
std::vector<BranchCert> check_branch_conditions(const Graph& g);

// Induced copies of catalog graphs; at most one embedding per entry is
// reported.  Entries larger than g are skipped.
struct ForbiddenCert {
    std::string name;
    VertexSet embedding;  // embedding[i] hosts catalog vertex i
};
std::vector<ForbiddenCert> scan_forbidden(const Graph& g,
                                          const std::vector<CatalogEntry>& catalog);

}  // namespace epglab

#endif
