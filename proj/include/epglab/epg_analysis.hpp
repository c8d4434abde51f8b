#ifndef EPGLAB_EPG_ANALYSIS_HPP
#define EPGLAB_EPG_ANALYSIS_HPP

#include <array>

#include "epglab/rep.hpp"

namespace epglab {

// How a clique of the intersection graph is realized on the grid: either all
// members share one grid edge, or the members pairwise meet on three edges
// around a common point (two collinear plus one perpendicular), each member
// covering exactly two of the three.
enum class CliqueKind { edge_clique, claw_clique, neither };

struct CliqueClass {
    CliqueKind kind = CliqueKind::neither;
    int edge = -1;                             // shared edge for edge cliques
    Pt center{};                               // claw center for claw cliques
    std::array<int, 3> claw = {-1, -1, -1};    // base, base, stem edge indices
};

CliqueClass classify_clique(const Rep& rep, const VertexSet& clique);

// Four paths around an interior point, each covering exactly two of its four
// incident edges, consecutive members sharing one of them and opposite
// members disjoint; the induced subgraph is a 4-cycle.  proper means all four
// members bend at the center; otherwise exactly two opposite members bend and
// the other two run straight through.
struct Pie {
    Pt center;
    bool proper = false;
    std::array<int, 4> members{};  // path ids in rotational order
};

std::vector<Pie> find_pies(const Rep& rep);

// maximal cliques of the intersection graph that no single grid edge carries
std::vector<VertexSet> non_edge_cliques(const Rep& rep);

// every maximal clique sits on a common edge
bool is_helly(const Rep& rep);

}  // namespace epglab

#endif
