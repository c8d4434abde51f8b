#ifndef EPGLAB_FAMILIES_HPP
#define EPGLAB_FAMILIES_HPP

#include <string>

#include "epglab/graph.hpp"

namespace epglab {

Graph path_graph(int n);              // n >= 1 vertices in a row
Graph cycle_graph(int n);             // n >= 3
Graph complete_graph(int n);          // n >= 1
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
Graph star_graph(int leaves);         // K_{1,k}, center 0
Graph claw_graph();                   // star_graph(3)
Graph wheel_graph(int n);             // n >= 4 total: cycle 0..n-2 plus hub n-1
Graph diamond_graph();                // K4 minus one edge
Graph bull_graph();                   // triangle 0,1,2 with pendants 3~0, 4~1
Graph net_graph();                    // triangle 0,1,2 with pendants 3~0, 4~1, 5~2
Graph gem_graph();                    // P4 0-1-2-3 plus dominating vertex 4

// Complete sun: clique y_0..y_{k-1} (ids k..2k-1), independent x_0..x_{k-1}
// (ids 0..k-1), x_i adjacent to y_i and y_{i-1 mod k}.  k >= 3.
Graph sun_graph(int k);

// Text specs used by the command line: "bull", "cycle:5",
// "complete_bipartite:3,3", "catalog:F5(9)", ...  Throws RangeError for
// parameters outside a family's range and ParseError for malformed specs.
Graph make_family(const std::string& spec);

// one line per known spec form, for usage messages
std::string family_help();

}  // namespace epglab

#endif
