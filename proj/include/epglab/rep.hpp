#ifndef EPGLAB_REP_HPP
#define EPGLAB_REP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

struct Pt {
    int x = 0, y = 0;
    bool operator==(const Pt&) const = default;
    auto operator<=>(const Pt&) const = default;
};

// A path on the grid with at most one bend: either a straight horizontal or
// vertical segment a-b, or two perpendicular segments a-corner and corner-b.
// Endpoints are kept in lexicographic order so equal paths compare equal.
struct PathB1 {
    Pt a, b;
    Pt corner;  // meaningful only when bent
    bool bent = false;

    bool operator==(const PathB1&) const = default;
    auto operator<=>(const PathB1&) const = default;
};

PathB1 straight_path(Pt a, Pt b);
PathB1 bent_path(Pt a, Pt corner, Pt b);

// Grid paths of a graph's vertices; width x height counts grid points.
struct Rep {
    int width = 0, height = 0;
    std::vector<PathB1> paths;

    int n() const { return static_cast<int>(paths.size()); }
    bool operator==(const Rep&) const = default;
};

// --- grid edges ---
// Horizontal edge x,y joins (x,y)-(x+1,y); vertical edge x,y joins
// (x,y)-(x,y+1).  Indices pack horizontals first.
int num_grid_edges(int width, int height);
int h_edge_index(int width, int height, int x, int y);
int v_edge_index(int width, int height, int x, int y);

using EdgeMask = std::vector<uint64_t>;

EdgeMask path_edge_mask(int width, int height, const PathB1& p);
bool masks_intersect(const EdgeMask& a, const EdgeMask& b);
int path_edge_count(const PathB1& p);

// edge indices in traversal order, starting from the lexicographically
// smaller endpoint (paths are stored with that endpoint first)
std::vector<int> edges_in_order(int width, int height, const PathB1& p);

// throws RangeError when p leaves the grid or is degenerate
void validate_path(int width, int height, const PathB1& p);
void validate_rep(const Rep& rep);

// vertices adjacent when their paths share at least one grid edge
Graph intersection_graph(const Rep& rep);

// Text format:
//   grid W H
//   0 : (0,1)-(3,1)
//   1 : (2,0)-(2,2)-(4,2)
// Lines may come in any order but must cover ids 0..n-1 exactly once.
Rep parse_rep(std::istream& in);
Rep parse_rep(const std::string& text);
std::string format_rep(const Rep& rep);
Rep load_rep(const std::string& path);
void save_rep(const Rep& rep, const std::string& path);

// drops unused grid lines; preserves the intersection graph
Rep compress_rep(const Rep& rep);

}  // namespace epglab

#endif
