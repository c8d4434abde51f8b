#ifndef EPGLAB_CLASSIFY_HPP
#define EPGLAB_CLASSIFY_HPP

#include <string>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

struct ClassFlags {
    bool bipartite = false;
    bool block_graph = false;        // every biconnected component is a clique
    bool cactus = false;             // connected, every block an edge or a cycle
    bool line_of_bipartite = false;  // claw-free, diamond-free, no odd hole
};

ClassFlags classify_graph(const Graph& g);

enum class Tri { yes, no, unknown };

// Search evidence about single-bend grid path representability.
struct VennEvidence {
    Tri b1 = Tri::unknown;        // has a representation at all
    Tri helly_b1 = Tri::unknown;  // has a helly representation
};

// Fills unknowns that the class flags already decide: block graphs, cacti and
// line graphs of bipartite graphs always have helly representations, and a
// bipartite graph with a representation has a helly one.
VennEvidence upgrade_evidence(const ClassFlags& f, VennEvidence e);

// Region of the class map.  regions holds one id when the flags and evidence
// pin the region down, several candidates otherwise; id 0 stands for the area
// outside all circles.
struct VennResult {
    std::vector<int> regions;
    bool decided() const { return regions.size() == 1; }
};

VennResult venn_region(const ClassFlags& f, VennEvidence e);
std::string venn_region_name(int region);

}  // namespace epglab

#endif
